#include <gtest/gtest.h>

#include <random>

#include "quandle/error.hpp"
#include "quandle/free_quandle.hpp"
#include "test_support.hpp"

namespace quandle {
namespace {

const GeneratorSet& abc() {
  static const GeneratorSet gens({"a", "b", "c"});
  return gens;
}

FreeQuandleElement el(std::string_view text) { return normalize(parse_rack_element(text, abc())); }
std::string fmt(const FreeQuandleElement& e) { return format_element(e, abc()); }
GroupWord word(std::string_view text) { return parse_word(text, abc()); }

FreeQuandleElement random_element(std::mt19937_64& rng, std::size_t rank, std::size_t len) {
  return normalize(testing::random_rack_element(rng, rank, len));
}

TEST(Normalize, StripsLeadingPowersOfTheBase) {
  EXPECT_EQ(fmt(el("a ^ a b")), "a ^ b");
  EXPECT_EQ(fmt(el("a ^ a^-1 a^-1 b c")), "a ^ b c");
  EXPECT_EQ(fmt(el("a ^ a")), "a");
  EXPECT_EQ(fmt(el("a ^ b a")), "a ^ b a");
  EXPECT_EQ(fmt(el("b ^ a b")), "b ^ a b");
  EXPECT_EQ(el("a ^ a"), FreeQuandleElement::generator(0));
}

TEST(Normalize, Idempotent) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const auto e = random_element(rng, 3, 8);
    EXPECT_EQ(normalize(e.as_rack()), e);
    if (!e.word().is_identity()) EXPECT_NE(e.word().letters()[0].gen, e.gen());
  }
}

TEST(RackOp, Examples) {
  const auto a = FreeQuandleElement::generator(0);
  const auto b = FreeQuandleElement::generator(1);
  EXPECT_EQ(fmt(rack_op(a, b)), "a ^ b");
  EXPECT_EQ(fmt(rack_op(rack_op(a, b), a)), "a ^ b a");
  EXPECT_EQ(fmt(rack_op(a, a)), "a");
  EXPECT_EQ(fmt(rack_op(a, el("b ^ c"))), "a ^ c^-1 b c");
  EXPECT_EQ(fmt(rack_op_inv(a, b)), "a ^ b^-1");
  EXPECT_EQ(rack_op_inv(rack_op(a, b), b), a);
}

TEST(RackOp, FreeRackIsNotAQuandle) {
  const RackElement a{0, {}};
  const RackElement aa = rack_op(a, a);
  EXPECT_NE(aa, a);
  EXPECT_EQ(normalize(aa), normalize(a));
  EXPECT_EQ(rack_op_inv(rack_op(a, RackElement{1, word("c")}), RackElement{1, word("c")}), a);
}

TEST(Embed, Examples) {
  EXPECT_EQ(format_word(embed(el("a ^ b")), abc()), "b^-1 a b");
  EXPECT_EQ(format_word(embed(el("a")), abc()), "a");
  EXPECT_EQ(format_word(embed(parse_rack_element("a ^ a b", abc())), abc()), "b^-1 a b");
}

TEST(Embed, InjectiveOnNormalForms) {
  std::mt19937_64 rng(12);
  std::vector<FreeQuandleElement> seen;
  for (int i = 0; i < 300; ++i) seen.push_back(random_element(rng, 2, 5));
  for (const auto& x : seen) {
    for (const auto& y : seen) EXPECT_EQ(x == y, embed(x) == embed(y));
  }
}

TEST(FqEqual, Examples) {
  EXPECT_TRUE(fq_equal(el("a ^ a b"), el("a ^ b")));
  EXPECT_TRUE(fq_equal(el("a ^ a^-1"), el("a")));
  EXPECT_FALSE(fq_equal(el("a ^ b"), el("a")));
  EXPECT_FALSE(fq_equal(el("a ^ b"), el("b ^ a")));
}

TEST(FreeQuandle, AxiomsHold) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 400; ++i) {
    const auto x = random_element(rng, 3, 5);
    const auto y = random_element(rng, 3, 5);
    const auto z = random_element(rng, 3, 5);
    EXPECT_EQ(rack_op(x, x), x);
    EXPECT_EQ(rack_op_inv(rack_op(x, y), y), x);
    EXPECT_EQ(rack_op(rack_op_inv(x, y), y), x);
    EXPECT_EQ(rack_op(rack_op(x, y), z), rack_op(rack_op(x, z), rack_op(y, z)));
  }
}

TEST(FreeQuandle, EmbeddingIsAHomIntoConj) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 400; ++i) {
    const auto x = random_element(rng, 3, 6);
    const auto y = random_element(rng, 3, 6);
    EXPECT_EQ(embed(rack_op(x, y)), conjugate(embed(x), embed(y)));
    EXPECT_EQ(embed(rack_op_inv(x, y)), multiply(multiply(embed(y), embed(x)), invert(embed(y))));
  }
}

TEST(Separate, Examples) {
  const auto a = el("a");
  const auto b = el("b");
  const auto w1 = separate(a, b, 3);
  EXPECT_EQ(w1.degree, 3u);
  EXPECT_NE(w1.first_image, w1.second_image);
  const auto w2 = separate(el("a ^ b"), a, 3);
  EXPECT_EQ(w2.degree, 5u);
  EXPECT_NE(w2.first_image, w2.second_image);
  EXPECT_THROW(separate(el("a ^ a b"), el("a ^ b"), 3), PreconditionError);
}

TEST(Separate, WitnessIsAHomAndSeparates) {
  std::mt19937_64 rng(15);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const auto x = random_element(rng, 3, 4);
    const auto y = random_element(rng, 3, 4);
    if (x == y) continue;
    ++checked;
    const auto w = separate(x, y, 3);
    ASSERT_EQ(w.generator_images.size(), 3u);
    EXPECT_EQ(w.first_image, w.image_of(x));
    EXPECT_EQ(w.second_image, w.image_of(y));
    EXPECT_NE(w.first_image, w.second_image);
    // Conj(S_n) has x * y = y^{-1} x y.
    const auto z = random_element(rng, 3, 4);
    EXPECT_EQ(w.image_of(rack_op(x, z)), w.image_of(x).conjugated_by(w.image_of(z)));
    EXPECT_EQ(w.image_of(rack_op_inv(x, z)), w.image_of(x).conjugated_by(w.image_of(z).inverse()));
    EXPECT_EQ(w.image_of(FreeQuandleElement::generator(1)), w.generator_images[1]);
  }
  EXPECT_GT(checked, 250);
}

TEST(Enveloping, FreeGroup) {
  const auto p = enveloping_of_free(abc());
  EXPECT_EQ(p.generators, abc());
  EXPECT_TRUE(p.relations.empty());
  EXPECT_EQ(format_presentation(p), "< a, b, c | >");
  EXPECT_THROW(enveloping_of_free(GeneratorSet{}), PreconditionError);
}

TEST(ParseRackElement, Errors) {
  EXPECT_THROW(parse_rack_element("d", abc()), ParseError);
  EXPECT_THROW(parse_rack_element("a ^", abc()), ParseError);
  EXPECT_THROW(parse_rack_element("a ^ q", abc()), ParseError);
  EXPECT_THROW(parse_rack_element("", abc()), ParseError);
  EXPECT_EQ(parse_rack_element("  b ^ a^-1 ", abc()).word, word("a^-1"));
}

}  // namespace
}  // namespace quandle
