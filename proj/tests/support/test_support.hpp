#pragma once

// Independent oracles and generators shared by the unit and acceptance
// suites. Nothing here calls the search code it is used to check.

#include <cstddef>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "quandle/quandle.hpp"

namespace quandle::testing {

struct Named {
  std::string name;
  FiniteQuandle quandle;
};

/// Recursive evaluation written directly against the operation table.
inline Element oracle_eval(const QuandleTerm& t, const FiniteQuandle& f, const std::vector<Element>& a) {
  if (t.is_leaf()) return a[t.gen()];
  const Element l = oracle_eval(t.left(), f, a);
  const Element r = oracle_eval(t.right(), f, a);
  if (t.op() == Op::Star) return f.op(l, r);
  for (Element z = 0; z < f.order(); ++z) {
    if (f.op(z, r) == l) return z;
  }
  return static_cast<Element>(-1);
}

/// Filters all |F|^rank assignments against the relations.
inline std::vector<Assignment> brute_force_homs(const QuandlePresentation& p, const FiniteQuandle& f) {
  std::vector<Assignment> out;
  const std::size_t n = f.order();
  const std::size_t g = p.rank();
  std::vector<Element> a(g, 0);
  while (true) {
    bool ok = true;
    for (const auto& r : p.relations()) {
      if (oracle_eval(r.lhs, f, a) != oracle_eval(r.rhs, f, a)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(a);
    // Odometer with the last generator fastest: lexicographic order.
    std::size_t k = g;
    while (k > 0 && a[k - 1] + 1 == n) a[--k] = 0;
    if (k == 0) break;
    ++a[k - 1];
  }
  return out;
}

/// Counts colorings of a braid closure by pushing strand colors through the
/// braid: σ_i (a, b) -> (b, a*b), σ_i^{-1} (a, b) -> (b/a, a).
inline std::size_t braid_coloring_oracle(const BraidWord& b, const FiniteQuandle& f) {
  const std::size_t n = f.order();
  std::vector<Element> start(b.strands, 0);
  std::size_t count = 0;
  while (true) {
    std::vector<Element> s = start;
    for (int l : b.letters) {
      const std::size_t i = static_cast<std::size_t>(l > 0 ? l : -l) - 1;
      const Element x = s[i], y = s[i + 1];
      if (l > 0) {
        s[i] = y;
        s[i + 1] = f.op(x, y);
      } else {
        Element z = 0;
        while (f.op(z, x) != y) ++z;
        s[i] = z;
        s[i + 1] = x;
      }
    }
    if (s == start) ++count;
    std::size_t k = b.strands;
    while (k > 0 && start[k - 1] + 1 == n) start[--k] = 0;
    if (k == 0) break;
    ++start[k - 1];
  }
  return count;
}

inline GroupWord random_word(std::mt19937_64& rng, std::size_t rank, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> gen(0, rank - 1);
  std::bernoulli_distribution sign(0.5);
  std::vector<Letter> letters(len(rng));
  for (auto& l : letters) l = {gen(rng), sign(rng) ? 1 : -1};
  return GroupWord::reduce(letters, rank);
}

inline RackElement random_rack_element(std::mt19937_64& rng, std::size_t rank, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> gen(0, rank - 1);
  const std::size_t a = gen(rng);
  return {a, random_word(rng, rank, max_len)};
}

inline QuandleTerm random_term(std::mt19937_64& rng, std::size_t rank, std::size_t depth) {
  std::uniform_int_distribution<std::size_t> gen(0, rank - 1);
  if (depth == 0 || std::bernoulli_distribution(0.3)(rng)) return QuandleTerm::leaf(gen(rng));
  const Op op = std::bernoulli_distribution(0.5)(rng) ? Op::Star : Op::StarInv;
  return QuandleTerm::node(op, random_term(rng, rank, depth - 1), random_term(rng, rank, depth - 1));
}

inline std::vector<std::string> letters_names(std::size_t rank) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rank; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return names;
}

/// x -> k x mod n as an element map of Z_n.
inline std::vector<Element> scaling(std::size_t n, std::size_t k) {
  std::vector<Element> phi(n);
  for (std::size_t x = 0; x < n; ++x) phi[x] = static_cast<Element>(x * k % n);
  return phi;
}

/// Quandles built by every constructor in the library, all small.
inline std::vector<Named> construction_suite() {
  std::vector<Named> out;
  for (std::size_t n : {3, 4, 5, 6, 7}) out.push_back({"dihedral:" + std::to_string(n), dihedral_quandle(n)});
  for (std::size_t n = 1; n <= 6; ++n) out.push_back({"trivial:" + std::to_string(n), trivial_quandle(n)});

  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  for (std::size_t n : {2, 3, 4, 5, 6}) {
    const FiniteGroup z = FiniteGroup::cyclic(n);
    out.push_back({"conj:Z" + std::to_string(n), conj_quandle(z)});
    out.push_back({"core:Z" + std::to_string(n), core_quandle(z)});
    for (std::size_t k = 1; k < n; ++k) {
      if (std::gcd(k, n) == 1) {
        out.push_back({"alex:Z" + std::to_string(n) + "*" + std::to_string(k), alexander_quandle(z, scaling(n, k))});
      }
    }
  }
  out.push_back({"conj:S3", conj_quandle(s3)});
  out.push_back({"core:S3", core_quandle(s3)});
  // Conjugation by a transposition is an automorphism of S3.
  {
    std::vector<Element> phi(6);
    const Element t = 1;  // images [0 2 1], the transposition (1 2)
    for (Element x = 0; x < 6; ++x) phi[x] = s3.mul(s3.mul(s3.inv(t), x), t);
    out.push_back({"alex:S3", alexander_quandle(s3, phi)});
  }
  // Element 2 of S3 has images [1 0 2], the transposition (0 1).
  const std::vector<Element> h = generated_subgroup(s3, std::vector<Element>{2});
  out.push_back({"coset:S3/<(01)>,(01)", coset_quandle(s3, h, 2)});
  out.push_back({"coset:S3/1,e", coset_quandle(s3, std::vector<Element>{0}, 0)});
  const FiniteGroup z6 = FiniteGroup::cyclic(6);
  out.push_back({"coset:Z6/<3>,1", coset_quandle(z6, std::vector<Element>{0, 3}, 1)});
  const std::vector<FiniteQuandle> r3r3{dihedral_quandle(3), dihedral_quandle(3)};
  out.push_back({"product:R3xR3", product_quandle(r3r3)});
  const std::vector<FiniteQuandle> mixed{trivial_quandle(2), dihedral_quandle(3)};
  out.push_back({"product:T2xR3", product_quandle(mixed)});
  return out;
}

}  // namespace quandle::testing
