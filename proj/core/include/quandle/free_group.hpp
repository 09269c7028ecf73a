#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quandle/permutation.hpp"

namespace quandle {

/// Ordered list of distinct generator names; a generator's index is its
/// position.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  /// Throws MalformedInput on duplicates or names that are empty or contain
  /// whitespace or one of the reserved characters `^ * / ( ) = , |`.
  explicit GeneratorSet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::vector<std::string> names_;
};

struct Letter {
  std::size_t gen = 0;
  int exp = 1;  // +1 or -1

  Letter inverse() const noexcept { return {gen, -exp}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// An element of the free group F(S); always stored freely reduced, so
/// equality of words is equality of group elements.
class GroupWord {
 public:
  GroupWord() = default;

  /// Freely reduces `letters`. Throws MalformedInput if a generator index is
  /// not below `rank` or an exponent is not ±1.
  static GroupWord reduce(std::span<const Letter> letters, std::size_t rank);
  /// Reduction without a rank bound (exponents are still checked).
  static GroupWord reduce(std::span<const Letter> letters);

  static GroupWord generator(std::size_t gen, int exp = 1);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  friend auto operator<=>(const GroupWord&, const GroupWord&) = default;

 private:
  std::vector<Letter> letters_;
};

GroupWord multiply(const GroupWord& u, const GroupWord& v);
GroupWord invert(const GroupWord& u);
/// v^{-1} u v.
GroupWord conjugate(const GroupWord& u, const GroupWord& v);

/// Parses whitespace-separated tokens `name` or `name^-1`. The empty string
/// and a lone `1` denote the identity.
GroupWord parse_word(std::string_view text, const GeneratorSet& gens);
/// Inverse of parse_word; the identity renders as "1".
std::string format_word(const GroupWord& w, const GeneratorSet& gens);

/// A homomorphism F(S) -> S_n given by the images of the generators.
/// Words act letter by letter, leftmost letter first.
struct PermutationRep {
  std::size_t degree = 0;
  std::vector<Permutation> generator_images;

  Permutation evaluate(const GroupWord& w) const;
};

/// Builds ρ: F(S) -> S_{k+1}, k = |g|, with ρ(g) ≠ id. Letter j (0-based) of
/// g contributes the partial map j -> j+1 to its generator (or j+1 -> j for
/// an inverse letter); each partial injection is completed by pairing the
/// unmapped points with the unhit points in ascending order. Generators not
/// occurring in g map to the identity.
/// Throws PreconditionError if g is the identity.
PermutationRep permutation_rep(const GroupWord& g, std::size_t rank);

struct GroupPresentation {
  GeneratorSet generators;
  std::vector<std::pair<GroupWord, GroupWord>> relations;
};

/// "< x, y | y^-1 x y = x >"
std::string format_presentation(const GroupPresentation& p);

}  // namespace quandle
