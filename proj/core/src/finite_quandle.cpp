#include "quandle/finite_quandle.hpp"

#include <algorithm>

#include "quandle/error.hpp"

namespace quandle {

namespace {

Table make_table(std::size_t n, auto&& op) {
  Table t(n, std::vector<Element>(n));
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) t[x][y] = static_cast<Element>(op(x, y));
  }
  return t;
}

}  // namespace

FiniteQuandle FiniteQuandle::verify(const Table& table) {
  const std::size_t n = table.size();
  if (n == 0) throw MalformedInput("quandle must be non-empty");
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

  FiniteQuandle q;
  q.n_ = n;
  q.table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(table[i].begin(), table[i].end(), q.table_.begin() + static_cast<std::ptrdiff_t>(i * n));
  }

  for (Element x = 0; x < n; ++x) {
    if (q.op(x, x) != x) throw AxiomViolation(Axiom::Idempotence, {x}, "x * x != x");
  }

  constexpr Element kUnset = static_cast<Element>(-1);
  q.inv_table_.assign(n * n, kUnset);
  for (Element y = 0; y < n; ++y) {
    for (Element x = 0; x < n; ++x) {
      Element& slot = q.inv_table_[q.op(x, y) * n + y];
      if (slot != kUnset) {
        throw AxiomViolation(Axiom::RightInvertibility, {y, slot, x},
                             "column " + std::to_string(y) + " repeats a value");
      }
      slot = x;
    }
  }

  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element xy = q.op(x, y);
      for (Element z = 0; z < n; ++z) {
        if (q.op(xy, z) != q.op(q.op(x, z), q.op(y, z))) {
          throw AxiomViolation(Axiom::SelfDistributivity, {x, y, z}, "(x*y)*z != (x*z)*(y*z)");
        }
      }
    }
  }
  return q;
}

Table FiniteQuandle::table() const {
  return make_table(n_, [this](Element x, Element y) { return op(x, y); });
}

Table FiniteQuandle::inv_table() const {
  return make_table(n_, [this](Element x, Element y) { return op_inv(x, y); });
}

Permutation FiniteQuandle::inner(Element y) const {
  std::vector<Element> images(n_);
  for (Element x = 0; x < n_; ++x) images[x] = op(x, y);
  return Permutation(std::move(images));
}

bool FiniteQuandle::is_trivial() const {
  for (Element x = 0; x < n_; ++x) {
    for (Element y = 0; y < n_; ++y) {
      if (op(x, y) != x) return false;
    }
  }
  return true;
}

FiniteQuandle trivial_quandle(std::size_t n) {
  if (n == 0) throw MalformedInput("trivial quandle order must be positive");
  return FiniteQuandle::verify(make_table(n, [](Element x, Element) { return x; }));
}

FiniteQuandle dihedral_quandle(std::size_t n) {
  if (n == 0) throw MalformedInput("dihedral quandle order must be positive");
  return FiniteQuandle::verify(
      make_table(n, [n](Element x, Element y) { return (2 * y + n - x) % n; }));
}

FiniteQuandle conj_quandle(const FiniteGroup& g) {
  return FiniteQuandle::verify(
      make_table(g.order(), [&g](Element a, Element b) { return g.mul(g.mul(g.inv(b), a), b); }));
}

FiniteQuandle core_quandle(const FiniteGroup& g) {
  return FiniteQuandle::verify(
      make_table(g.order(), [&g](Element a, Element b) { return g.mul(g.mul(b, g.inv(a)), b); }));
}

FiniteQuandle alexander_quandle(const FiniteGroup& g, std::span<const Element> phi) {
  check_automorphism(g, phi);
  return FiniteQuandle::verify(make_table(
      g.order(), [&](Element a, Element b) { return g.mul(phi[g.mul(a, g.inv(b))], b); }));
}

FiniteQuandle coset_quandle(const FiniteGroup& g, std::span<const Element> h, Element z) {
  if (z >= g.order()) throw MalformedInput("coset quandle parameter out of range");
  const CosetDecomposition cosets = right_cosets(g, h);
  const ElementSet cent = centralizer(g, h);
  if (!std::binary_search(cent.begin(), cent.end(), z)) {
    throw AxiomViolation(Axiom::Centralizer, {z}, "z does not centralize H");
  }
  const Element z_inv = g.inv(z);
  return FiniteQuandle::verify(make_table(cosets.cosets.size(), [&](Element i, Element j) {
    const Element x = cosets.cosets[i].front();
    const Element y = cosets.cosets[j].front();
    const Element v = g.mul(g.mul(g.mul(g.mul(z_inv, x), g.inv(y)), z), y);
    return cosets.coset_of[v];
  }));
}

FiniteQuandle product_quandle(std::span<const FiniteQuandle> factors) {
  if (factors.empty()) throw MalformedInput("product needs at least one factor");
  std::size_t n = 1;
  for (const auto& f : factors) {
    n *= f.order();
    if (n > 4096) throw MalformedInput("product quandle larger than 4096 elements");
  }
  return FiniteQuandle::verify(make_table(n, [&](Element x, Element y) {
    const auto xs = product_coordinates(factors, x);
    const auto ys = product_coordinates(factors, y);
    Element out = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      out = out * static_cast<Element>(factors[k].order()) + factors[k].op(xs[k], ys[k]);
    }
    return out;
  }));
}

std::vector<Element> product_coordinates(std::span<const FiniteQuandle> factors, Element x) {
  std::vector<Element> coords(factors.size());
  for (std::size_t k = factors.size(); k-- > 0;) {
    const auto m = static_cast<Element>(factors[k].order());
    coords[k] = x % m;
    x /= m;
  }
  return coords;
}

PermutationGroup inner_group(const FiniteQuandle& q) {
  std::vector<Permutation> gens;
  gens.reserve(q.order());
  for (Element y = 0; y < q.order(); ++y) gens.push_back(q.inner(y));
  return closure(q.order(), std::move(gens));
}

bool is_hom(const FiniteQuandle& source, const FiniteQuandle& target,
            std::span<const Element> images) {
  if (images.size() != source.order()) return false;
  for (Element v : images) {
    if (v >= target.order()) return false;
  }
  for (Element x = 0; x < source.order(); ++x) {
    for (Element y = 0; y < source.order(); ++y) {
      if (images[source.op(x, y)] != target.op(images[x], images[y])) return false;
    }
  }
  return true;
}

bool preserves_inverse_op(const FiniteQuandle& source, const FiniteQuandle& target,
                          std::span<const Element> images) {
  for (Element x = 0; x < source.order(); ++x) {
    for (Element y = 0; y < source.order(); ++y) {
      if (images[source.op_inv(x, y)] != target.op_inv(images[x], images[y])) return false;
    }
  }
  return true;
}

QuandleHom hom_check(const FiniteQuandle& source, const FiniteQuandle& target,
                     std::vector<Element> images) {
  if (images.size() != source.order()) throw MalformedInput("map must list one image per element");
  for (Element v : images) {
    if (v >= target.order()) throw MalformedInput("map image out of range");
  }
  for (Element x = 0; x < source.order(); ++x) {
    for (Element y = 0; y < source.order(); ++y) {
      if (images[source.op(x, y)] != target.op(images[x], images[y])) {
        throw AxiomViolation(Axiom::Homomorphism, {x, y}, "f(x*y) != f(x)*f(y)");
      }
    }
  }
  QuandleHom hom;
  hom.images_ = std::move(images);
  return hom;
}

FixedPoints fixed_subquandle(const FiniteQuandle& q, std::span<const Element> alpha) {
  std::vector<Element> images(alpha.begin(), alpha.end());
  try {
    hom_check(q, q, images);
  } catch (const AxiomViolation& e) {
    throw AxiomViolation(Axiom::Automorphism, e.witness(), "map is not an endomorphism");
  }
  std::vector<bool> hit(q.order(), false);
  for (Element x = 0; x < q.order(); ++x) {
    if (hit[alpha[x]]) throw AxiomViolation(Axiom::Automorphism, {x}, "map is not injective");
    hit[alpha[x]] = true;
  }

  FixedPoints out;
  for (Element x = 0; x < q.order(); ++x) {
    if (alpha[x] == x) out.elements.push_back(x);
  }
  out.empty = out.elements.empty();
  if (!out.empty && !is_subquandle(q, out.elements)) {
    throw Error("internal: fixed points of an automorphism failed to form a subquandle");
  }
  return out;
}

bool is_subquandle(const FiniteQuandle& q, std::span<const Element> subset) {
  std::vector<bool> in(q.order(), false);
  for (Element x : subset) in.at(x) = true;
  for (Element x : subset) {
    for (Element y : subset) {
      if (!in[q.op(x, y)] || !in[q.op_inv(x, y)]) return false;
    }
  }
  return true;
}

}  // namespace quandle
