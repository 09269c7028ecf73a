#pragma once

#include <cstddef>
#include <span>
#include <unordered_set>
#include <vector>

#include "quandle/permutation.hpp"

namespace quandle {

/// Square operation table, row-major: `table[i][j]` is the product (or for
/// quandles, the operation) of i and j.
using Table = std::vector<std::vector<Element>>;

/// Sorted, duplicate-free subset of a finite structure.
using ElementSet = std::vector<Element>;

/// A finite group held as a verified Cayley table.
class FiniteGroup {
 public:
  /// Checks that `table` is a group table. Throws MalformedInput for a ragged
  /// table or out-of-range entry, AxiomViolation naming the first failed law
  /// (identity, inverse, associativity, checked in that order) otherwise.
  static FiniteGroup verify(const Table& table);

  static FiniteGroup cyclic(std::size_t n);
  /// S_k on the k! permutations of {0..k-1} in lexicographic order of their
  /// image arrays; the product i·j applies i first, then j.
  static FiniteGroup symmetric(std::size_t k);
  /// Direct product G×H with mixed-radix elements (g, h) -> g·|H| + h.
  static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

  std::size_t order() const noexcept { return n_; }
  Element identity() const noexcept { return identity_; }
  Element mul(Element a, Element b) const { return table_[a * n_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  Table table() const;

  bool is_abelian() const;

 private:
  FiniteGroup() = default;

  std::size_t n_ = 0;
  Element identity_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
};

/// Throws AxiomViolation(Subgroup) when `h` is not a subgroup of `g`;
/// returns the sorted, deduplicated subset on success.
ElementSet check_subgroup(const FiniteGroup& g, std::span<const Element> h);

/// Subgroup generated by `gens`.
ElementSet generated_subgroup(const FiniteGroup& g, std::span<const Element> gens);

struct CosetDecomposition {
  /// Right cosets Hx, each sorted; ordered by smallest member, so cosets[0] is H.
  std::vector<ElementSet> cosets;
  /// rep[g] is the index of the coset containing g.
  std::vector<Element> coset_of;
};

CosetDecomposition right_cosets(const FiniteGroup& g, std::span<const Element> h);

/// { x : xh = hx for all h in H }.
ElementSet centralizer(const FiniteGroup& g, std::span<const Element> h);

/// Throws AxiomViolation(Automorphism) unless `phi` is a bijective group
/// homomorphism of g.
void check_automorphism(const FiniteGroup& g, std::span<const Element> phi);

/// A permutation group given by generators together with its full element
/// set, obtained by breadth-first closure.
class PermutationGroup {
 public:
  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  /// Elements in sorted order.
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  bool contains(const Permutation& p) const;

  friend PermutationGroup closure(std::size_t degree, std::vector<Permutation> generators);

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

/// Throws MalformedInput when a generator's degree differs from `degree`.
PermutationGroup closure(std::size_t degree, std::vector<Permutation> generators);

}  // namespace quandle
