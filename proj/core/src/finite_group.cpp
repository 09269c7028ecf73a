#include "quandle/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>

#include "quandle/error.hpp"

namespace quandle {

namespace {

void check_square(const Table& table, std::size_t& n) {
  n = table.size();
  if (n == 0) throw MalformedInput("table must be non-empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw MalformedInput("row " + std::to_string(i) + " has " + std::to_string(table[i].size()) +
                           " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) {
        throw MalformedInput("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                             ") out of range");
      }
    }
  }
}

ElementSet normalized(std::span<const Element> h, std::size_t n) {
  ElementSet out(h.begin(), h.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (Element e : out) {
    if (e >= n) throw MalformedInput("subset element " + std::to_string(e) + " out of range");
  }
  return out;
}

}  // namespace

FiniteGroup FiniteGroup::verify(const Table& table) {
  std::size_t n = 0;
  check_square(table, n);

  FiniteGroup g;
  g.n_ = n;
  g.table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(table[i].begin(), table[i].end(), g.table_.begin() + static_cast<std::ptrdiff_t>(i * n));
  }

  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = g.mul(e, x) == x && g.mul(x, e) == x;
    if (ok) identity = e;
  }
  if (!identity) throw AxiomViolation(Axiom::GroupIdentity, {}, "no two-sided identity element");
  g.identity_ = *identity;

  g.inverse_.assign(n, 0);
  for (Element x = 0; x < n; ++x) {
    bool found = false;
    for (Element y = 0; y < n && !found; ++y) {
      if (g.mul(x, y) == g.identity_ && g.mul(y, x) == g.identity_) {
        g.inverse_[x] = y;
        found = true;
      }
    }
    if (!found) throw AxiomViolation(Axiom::GroupInverse, {x}, "element has no two-sided inverse");
  }

  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element ab = g.mul(a, b);
      for (Element c = 0; c < n; ++c) {
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) {
          throw AxiomViolation(Axiom::GroupAssociativity, {a, b, c}, "(ab)c != a(bc)");
        }
      }
    }
  }
  return g;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw MalformedInput("cyclic group order must be positive");
  Table t(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<Element>((i + j) % n);
  }
  return verify(t);
}

FiniteGroup FiniteGroup::symmetric(std::size_t k) {
  if (k == 0 || k > 5) throw MalformedInput("symmetric group degree must be in 1..5");
  std::vector<std::vector<Element>> perms;
  std::vector<Element> p(k);
  std::iota(p.begin(), p.end(), Element{0});
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const std::size_t n = perms.size();
  Table t(n, std::vector<Element>(n));
  std::vector<Element> prod(k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t x = 0; x < k; ++x) prod[x] = perms[j][perms[i][x]];
      auto it = std::lower_bound(perms.begin(), perms.end(), prod);
      t[i][j] = static_cast<Element>(it - perms.begin());
    }
  }
  return verify(t);
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t n = g.order() * h.order();
  Table t(n, std::vector<Element>(n));
  const auto m = static_cast<Element>(h.order());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      t[a][b] = g.mul(a / m, b / m) * m + h.mul(a % m, b % m);
    }
  }
  return verify(t);
}

Table FiniteGroup::table() const {
  Table t(n_, std::vector<Element>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) t[i][j] = table_[i * n_ + j];
  }
  return t;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < n_; ++a) {
    for (Element b = a + 1; b < n_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

ElementSet check_subgroup(const FiniteGroup& g, std::span<const Element> h) {
  ElementSet set = normalized(h, g.order());
  auto member = [&](Element e) { return std::binary_search(set.begin(), set.end(), e); };
  if (!member(g.identity())) throw AxiomViolation(Axiom::Subgroup, {}, "subset lacks the identity");
  for (Element a : set) {
    if (!member(g.inv(a))) throw AxiomViolation(Axiom::Subgroup, {a}, "subset not closed under inverse");
    for (Element b : set) {
      if (!member(g.mul(a, b))) {
        throw AxiomViolation(Axiom::Subgroup, {a, b}, "subset not closed under product");
      }
    }
  }
  return set;
}

ElementSet generated_subgroup(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<bool> in(g.order(), false);
  std::deque<Element> queue{g.identity()};
  in[g.identity()] = true;
  const ElementSet generators = normalized(gens, g.order());
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (Element s : generators) {
      const Element y = g.mul(x, s);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  ElementSet out;
  for (Element x = 0; x < g.order(); ++x) {
    if (in[x]) out.push_back(x);
  }
  return out;
}

CosetDecomposition right_cosets(const FiniteGroup& g, std::span<const Element> h) {
  const ElementSet sub = check_subgroup(g, h);
  CosetDecomposition out;
  constexpr Element kUnset = static_cast<Element>(-1);
  out.coset_of.assign(g.order(), kUnset);
  // Scanning x ascending makes x the smallest member of each new coset Hx.
  for (Element x = 0; x < g.order(); ++x) {
    if (out.coset_of[x] != kUnset) continue;
    ElementSet coset;
    coset.reserve(sub.size());
    for (Element s : sub) coset.push_back(g.mul(s, x));
    std::sort(coset.begin(), coset.end());
    const auto index = static_cast<Element>(out.cosets.size());
    for (Element y : coset) out.coset_of[y] = index;
    out.cosets.push_back(std::move(coset));
  }
  return out;
}

ElementSet centralizer(const FiniteGroup& g, std::span<const Element> h) {
  const ElementSet set = normalized(h, g.order());
  ElementSet out;
  for (Element x = 0; x < g.order(); ++x) {
    bool commutes = true;
    for (Element y : set) {
      if (g.mul(x, y) != g.mul(y, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) out.push_back(x);
  }
  return out;
}

void check_automorphism(const FiniteGroup& g, std::span<const Element> phi) {
  if (phi.size() != g.order()) throw MalformedInput("automorphism must list one image per element");
  std::vector<bool> hit(g.order(), false);
  for (std::size_t x = 0; x < phi.size(); ++x) {
    if (phi[x] >= g.order()) throw MalformedInput("automorphism image out of range");
    if (hit[phi[x]]) throw AxiomViolation(Axiom::Automorphism, {x}, "map is not injective");
    hit[phi[x]] = true;
  }
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) {
      if (phi[g.mul(a, b)] != g.mul(phi[a], phi[b])) {
        throw AxiomViolation(Axiom::Automorphism, {a, b}, "phi(ab) != phi(a)phi(b)");
      }
    }
  }
}

bool PermutationGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

PermutationGroup closure(std::size_t degree, std::vector<Permutation> generators) {
  for (const auto& s : generators) {
    if (s.degree() != degree) throw MalformedInput("generator degree does not match group degree");
  }
  PermutationGroup group;
  group.degree_ = degree;
  group.generators_ = std::move(generators);

  std::unordered_set<Permutation> seen;
  std::deque<Permutation> queue;
  Permutation id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(std::move(id));
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : group.generators_) {
      Permutation y = x.then(s);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  group.elements_.assign(seen.begin(), seen.end());
  std::sort(group.elements_.begin(), group.elements_.end());
  return group;
}

}  // namespace quandle
