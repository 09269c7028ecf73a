#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace quandle {

/// Index of an element of a finite set (group, quandle, permutation domain).
using Element = std::uint32_t;

/// A bijection of {0, ..., degree-1}. Composition reads left to right:
/// `p.then(q)` first applies p, then q.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `images` is a bijection; throws MalformedInput otherwise.
  explicit Permutation(std::vector<Element> images);

  static Permutation identity(std::size_t degree);
  static Permutation transposition(std::size_t degree, Element a, Element b);

  std::size_t degree() const noexcept { return images_.size(); }
  Element operator()(Element point) const { return images_[point]; }
  std::span<const Element> images() const noexcept { return images_; }

  Permutation then(const Permutation& next) const;
  Permutation inverse() const;

  /// g^{-1} * this * g in left-to-right composition.
  Permutation conjugated_by(const Permutation& g) const;

  bool is_identity() const noexcept;

  /// Disjoint-cycle notation with fixed points omitted, e.g. "(0 1 2)(3 4)";
  /// the identity renders as "()".
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Element> images_;
};

}  // namespace quandle

template <>
struct std::hash<quandle::Permutation> {
  std::size_t operator()(const quandle::Permutation& p) const noexcept;
};
