#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "quandle/finite_group.hpp"
#include "quandle/permutation.hpp"

namespace quandle {

/// A finite quandle held as a verified operation table. Orientation:
/// `op(x, y)` is x * y, so column y is the inner automorphism S_y.
class FiniteQuandle {
 public:
  /// Checks the quandle axioms in order: idempotence (witness x), bijective
  /// right translations (witness column y and two rows with equal entries),
  /// right self-distributivity (witness x, y, z). Throws MalformedInput on a
  /// ragged or out-of-range table and AxiomViolation on the first failure.
  static FiniteQuandle verify(const Table& table);

  std::size_t order() const noexcept { return n_; }
  Element op(Element x, Element y) const { return table_[x * n_ + y]; }
  /// The unique z with op(z, y) == x.
  Element op_inv(Element x, Element y) const { return inv_table_[x * n_ + y]; }

  Table table() const;
  Table inv_table() const;

  /// S_y : x -> x * y.
  Permutation inner(Element y) const;

  bool is_trivial() const;

  friend bool operator==(const FiniteQuandle&, const FiniteQuandle&) = default;

 private:
  FiniteQuandle() = default;

  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inv_table_;
};

/// x * y = x on n elements.
FiniteQuandle trivial_quandle(std::size_t n);
/// R_n: i * j = 2j - i mod n.
FiniteQuandle dihedral_quandle(std::size_t n);
/// a * b = b^{-1} a b.
FiniteQuandle conj_quandle(const FiniteGroup& g);
/// a * b = b a^{-1} b.
FiniteQuandle core_quandle(const FiniteGroup& g);
/// a * b = phi(a b^{-1}) b; `phi` must be an automorphism of g.
FiniteQuandle alexander_quandle(const FiniteGroup& g, std::span<const Element> phi);

/// Quandle on the right cosets of h (indexed as in right_cosets) with
/// Hx * Hy = H z^{-1} x y^{-1} z y. Requires h to be a subgroup and z to
/// centralize it; throws AxiomViolation(Centralizer) otherwise.
FiniteQuandle coset_quandle(const FiniteGroup& g, std::span<const Element> h, Element z);

/// Componentwise operation on the cartesian product; the element (x_1..x_k)
/// is encoded in mixed radix with the first factor most significant.
FiniteQuandle product_quandle(std::span<const FiniteQuandle> factors);

/// Coordinates of a product element, inverse of the mixed-radix encoding.
std::vector<Element> product_coordinates(std::span<const FiniteQuandle> factors, Element x);

/// Inn(Q) = < S_y : y in Q >.
PermutationGroup inner_group(const FiniteQuandle& q);

/// A map between finite quandles verified to preserve *.
class QuandleHom {
 public:
  std::span<const Element> images() const noexcept { return images_; }
  Element operator()(Element x) const { return images_[x]; }

  friend QuandleHom hom_check(const FiniteQuandle& source, const FiniteQuandle& target,
                              std::vector<Element> images);

 private:
  std::vector<Element> images_;
};

/// Throws AxiomViolation(Homomorphism) with the first pair (x, y) where
/// images[x*y] != images[x] * images[y].
QuandleHom hom_check(const FiniteQuandle& source, const FiniteQuandle& target,
                     std::vector<Element> images);

/// True iff `images` preserves the operation (no exception).
bool is_hom(const FiniteQuandle& source, const FiniteQuandle& target,
            std::span<const Element> images);
/// Same test for *^{-1}.
bool preserves_inverse_op(const FiniteQuandle& source, const FiniteQuandle& target,
                          std::span<const Element> images);

struct FixedPoints {
  ElementSet elements;
  /// Set when Fix(alpha) is empty; the subquandle statement needs it non-empty.
  bool empty = false;
};

/// Fix(alpha) for a quandle automorphism alpha. Throws
/// AxiomViolation(Automorphism) if alpha is not a bijective endomorphism.
FixedPoints fixed_subquandle(const FiniteQuandle& q, std::span<const Element> alpha);

/// True iff `subset` is closed under * and *^{-1}.
bool is_subquandle(const FiniteQuandle& q, std::span<const Element> subset);

}  // namespace quandle
