#include "quandle/free_quandle.hpp"

#include <cassert>
#include <cctype>

#include "quandle/error.hpp"

namespace quandle {

FreeQuandleElement FreeQuandleElement::generator(std::size_t gen) {
  FreeQuandleElement e;
  e.gen_ = gen;
  return e;
}

FreeQuandleElement FreeQuandleElement::normalize(const RackElement& e) {
  auto letters = e.word.letters();
  std::size_t strip = 0;
  while (strip < letters.size() && letters[strip].gen == e.gen) ++strip;
  FreeQuandleElement out;
  out.gen_ = e.gen;
  // The suffix of a reduced word is reduced.
  out.word_ = GroupWord::reduce(letters.subspan(strip));
  return out;
}

RackElement rack_op(const RackElement& x, const RackElement& y) {
  const GroupWord b = GroupWord::generator(y.gen);
  return {x.gen, multiply(x.word, conjugate(b, y.word))};
}

RackElement rack_op_inv(const RackElement& x, const RackElement& y) {
  const GroupWord b_inv = GroupWord::generator(y.gen, -1);
  return {x.gen, multiply(x.word, conjugate(b_inv, y.word))};
}

FreeQuandleElement rack_op(const FreeQuandleElement& x, const FreeQuandleElement& y) {
  return normalize(rack_op(x.as_rack(), y.as_rack()));
}

FreeQuandleElement rack_op_inv(const FreeQuandleElement& x, const FreeQuandleElement& y) {
  return normalize(rack_op_inv(x.as_rack(), y.as_rack()));
}

GroupWord embed(const RackElement& e) {
  return conjugate(GroupWord::generator(e.gen), e.word);
}

GroupWord embed(const FreeQuandleElement& e) { return embed(e.as_rack()); }

bool fq_equal(const FreeQuandleElement& x, const FreeQuandleElement& y) {
  const bool structural = x == y;
  assert(structural == (embed(x) == embed(y)));
  return structural;
}

Permutation SeparationWitness::image_of(const FreeQuandleElement& e) const {
  PermutationRep rep{degree, generator_images};
  return rep.evaluate(GroupWord::generator(e.gen())).conjugated_by(rep.evaluate(e.word()));
}

SeparationWitness separate(const FreeQuandleElement& x, const FreeQuandleElement& y,
                           std::size_t rank) {
  if (fq_equal(x, y)) throw PreconditionError("separate requires distinct elements");
  const GroupWord g1 = embed(x);
  const GroupWord g2 = embed(y);
  const PermutationRep rep = permutation_rep(multiply(invert(g2), g1), rank);

  SeparationWitness w;
  w.degree = rep.degree;
  w.generator_images = rep.generator_images;
  w.first_image = w.image_of(x);
  w.second_image = w.image_of(y);
  if (w.first_image == w.second_image) {
    throw Error("internal: separation witness failed to separate");
  }
  return w;
}

GroupPresentation enveloping_of_free(const GeneratorSet& gens) {
  if (gens.empty()) throw PreconditionError("a free quandle needs at least one generator");
  return {gens, {}};
}

RackElement parse_rack_element(std::string_view text, const GeneratorSet& gens) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  const std::size_t start = pos;
  while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != '^') {
    ++pos;
  }
  const std::string_view name = text.substr(start, pos - start);
  if (name.empty()) throw ParseError("expected a generator name", start);
  auto gen = gens.index_of(name);
  if (!gen) throw ParseError("unknown generator '" + std::string(name) + "'", start);

  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == text.size()) return {*gen, {}};
  if (text[pos] != '^') throw ParseError("expected '^' after the base generator", pos);
  ++pos;
  if (text.find_first_not_of(" \t\r\n", pos) == std::string_view::npos) {
    throw ParseError("expected a word after '^'", pos);
  }
  try {
    return {*gen, parse_word(text.substr(pos), gens)};
  } catch (const ParseError& e) {
    throw ParseError(e.message(), pos + e.position());
  }
}

std::string format_element(const RackElement& e, const GeneratorSet& gens) {
  if (e.word.is_identity()) return gens.name(e.gen);
  return gens.name(e.gen) + " ^ " + format_word(e.word, gens);
}

std::string format_element(const FreeQuandleElement& e, const GeneratorSet& gens) {
  return format_element(e.as_rack(), gens);
}

}  // namespace quandle
