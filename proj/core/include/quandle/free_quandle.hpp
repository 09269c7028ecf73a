#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "quandle/free_group.hpp"
#include "quandle/permutation.hpp"

namespace quandle {

/// a^w in the free rack FR(S) = S × F(S).
struct RackElement {
  std::size_t gen = 0;
  GroupWord word;

  friend bool operator==(const RackElement&, const RackElement&) = default;
};

/// a^w in the free quandle FQ(S), kept in normal form: w does not begin with
/// a or a^{-1}. Kamada's relation a^w = a^{aw} identifies exactly the words
/// that differ by a leading power of a, so the normal form is the shortest
/// representative of the class and equality is structural.
class FreeQuandleElement {
 public:
  /// The generator a itself, i.e. a^1.
  static FreeQuandleElement generator(std::size_t gen);
  static FreeQuandleElement normalize(const RackElement& e);

  std::size_t gen() const noexcept { return gen_; }
  const GroupWord& word() const noexcept { return word_; }
  RackElement as_rack() const { return {gen_, word_}; }

  friend bool operator==(const FreeQuandleElement&, const FreeQuandleElement&) = default;
  friend auto operator<=>(const FreeQuandleElement&, const FreeQuandleElement&) = default;

 private:
  FreeQuandleElement() = default;

  std::size_t gen_ = 0;
  GroupWord word_;
};

inline FreeQuandleElement normalize(const RackElement& e) { return FreeQuandleElement::normalize(e); }

/// Free rack operation a^w * b^u = a^{w u^{-1} b u}.
RackElement rack_op(const RackElement& x, const RackElement& y);
RackElement rack_op_inv(const RackElement& x, const RackElement& y);

FreeQuandleElement rack_op(const FreeQuandleElement& x, const FreeQuandleElement& y);
/// The unique z with rack_op(z, y) == x: a^{w u^{-1} b^{-1} u}.
FreeQuandleElement rack_op_inv(const FreeQuandleElement& x, const FreeQuandleElement& y);

/// a^w -> w^{-1} a w in Conj(F(S)); injective on normal forms.
GroupWord embed(const FreeQuandleElement& e);
GroupWord embed(const RackElement& e);

bool fq_equal(const FreeQuandleElement& x, const FreeQuandleElement& y);

/// A homomorphism FQ(S) -> Conj(S_n), given on generators, that separates
/// two elements.
struct SeparationWitness {
  std::size_t degree = 0;
  std::vector<Permutation> generator_images;
  Permutation first_image;
  Permutation second_image;

  /// Image of a^w: ρ(w)^{-1} ρ(a) ρ(w).
  Permutation image_of(const FreeQuandleElement& e) const;
};

/// Takes ρ = permutation_rep(embed(y)^{-1} embed(x)); since ρ is injective
/// on that element, the images of x and y differ. Throws PreconditionError
/// when x and y are equal.
SeparationWitness separate(const FreeQuandleElement& x, const FreeQuandleElement& y,
                           std::size_t rank);

/// G_{FQ(S)} = F(S): the presentation on S with no relations. Throws
/// PreconditionError when S is empty.
GroupPresentation enveloping_of_free(const GeneratorSet& gens);

/// `a`, or `a ^ <word>` (e.g. `a ^ b a^-1`).
RackElement parse_rack_element(std::string_view text, const GeneratorSet& gens);
std::string format_element(const FreeQuandleElement& e, const GeneratorSet& gens);
std::string format_element(const RackElement& e, const GeneratorSet& gens);

}  // namespace quandle
