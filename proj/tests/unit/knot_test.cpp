#include <gtest/gtest.h>

#include "quandle/error.hpp"
#include "quandle/knot.hpp"
#include "quandle/table_io.hpp"
#include "test_support.hpp"

namespace quandle {
namespace {

using testing::braid_coloring_oracle;

const BraidWord kUnknot0{1, {}};
const BraidWord kUnknot1{2, {1}};
const BraidWord kTrefoil{2, {1, 1, 1}};
const BraidWord kMirrorTrefoil{2, {-1, -1, -1}};
const BraidWord kFigureEight{3, {1, -2, 1, -2}};
const BraidWord kMirrorFigureEight{3, {-1, 2, -1, 2}};

BraidWord mirror(BraidWord b) {
  for (int& l : b.letters) l = -l;
  return b;
}

std::string data(const char* name) { return read_file(std::string(QUANDLE_TEST_DATA) + "/" + name); }

TEST(Braid, Parse) {
  const auto b = parse_braid("strands=3 1 -2 1 -2");
  EXPECT_EQ(b.strands, 3u);
  EXPECT_EQ(b.letters, (std::vector<int>{1, -2, 1, -2}));
  EXPECT_EQ(parse_braid("strands=1").letters.size(), 0u);
  EXPECT_THROW(parse_braid("1 1 1"), ParseError);
  EXPECT_THROW(parse_braid("strands=2 1 x"), ParseError);
  EXPECT_THROW(parse_braid("strands=2 2"), ParseError);
  EXPECT_THROW(parse_braid("strands=2 0"), ParseError);
  EXPECT_THROW(validate_braid(BraidWord{0, {}}), MalformedInput);
  EXPECT_THROW(validate_braid(BraidWord{2, {2}}), MalformedInput);
}

TEST(Braid, Components) {
  EXPECT_EQ(closure_components(kUnknot0), 1u);
  EXPECT_EQ(closure_components(kTrefoil), 1u);
  EXPECT_EQ(closure_components(kFigureEight), 1u);
  EXPECT_EQ(closure_components(BraidWord{2, {1, 1}}), 2u);
  EXPECT_EQ(closure_components(BraidWord{3, {}}), 3u);
  EXPECT_THROW(braid_presentation(BraidWord{2, {1, 1}}), PreconditionError);
}

TEST(Braid, TrefoilPresentation) {
  const auto p = braid_presentation(kTrefoil);
  EXPECT_EQ(p.generators().names(), (std::vector<std::string>{"g1", "g2", "c1", "c2", "c3"}));
  EXPECT_EQ(p.relations().size(), 5u);
  EXPECT_EQ(format_term(p.relations()[0].rhs, p.generators()), "(g1 * g2)");
}

TEST(Braid, CountsAgainstPushForward) {
  const std::vector<FiniteQuandle> fs{dihedral_quandle(3), dihedral_quandle(5), dihedral_quandle(7),
                                      trivial_quandle(2), conj_quandle(FiniteGroup::symmetric(3))};
  const std::vector<BraidWord> braids{kUnknot0,        kUnknot1, kTrefoil, kMirrorTrefoil, kFigureEight,
                                      kMirrorFigureEight, BraidWord{3, {1, 2}}, BraidWord{2, {1, 1, 1, 1, 1}},
                                      BraidWord{3, {1, 1, 2, -1, -2, 1}}};
  for (const auto& b : braids) {
    for (const auto& f : fs) {
      EXPECT_EQ(coloring_invariant(b, f).count, braid_coloring_oracle(b, f));
    }
  }
}

TEST(Braid, KnownCounts) {
  // (R3, R5, R7) colorings.
  const auto counts = [](const Diagram& d) {
    return std::vector<std::size_t>{coloring_invariant(d, dihedral_quandle(3)).count,
                                    coloring_invariant(d, dihedral_quandle(5)).count,
                                    coloring_invariant(d, dihedral_quandle(7)).count};
  };
  EXPECT_EQ(counts(kUnknot0), (std::vector<std::size_t>{3, 5, 7}));
  EXPECT_EQ(counts(kUnknot1), (std::vector<std::size_t>{3, 5, 7}));
  EXPECT_EQ(counts(kTrefoil), (std::vector<std::size_t>{9, 5, 7}));
  EXPECT_EQ(counts(kFigureEight), (std::vector<std::size_t>{3, 25, 7}));
}

TEST(Braid, MirrorInvariance) {
  const std::vector<FiniteQuandle> fs{dihedral_quandle(3), dihedral_quandle(5), conj_quandle(FiniteGroup::symmetric(3))};
  for (const auto& b : {kTrefoil, kFigureEight, BraidWord{3, {1, 2}}, BraidWord{2, {1, 1, 1, 1, 1}}}) {
    for (const auto& f : fs) {
      EXPECT_EQ(coloring_invariant(b, f).count, coloring_invariant(mirror(b), f).count);
    }
  }
}

TEST(Braid, EveryColoringIsAHomAndConstantsAreColorings) {
  const auto p = braid_presentation(kFigureEight);
  const auto r5 = dihedral_quandle(5);
  const auto homs = hom_enumerate(p, r5);
  EXPECT_EQ(homs.size(), 25u);
  for (Element c = 0; c < 5; ++c) {
    EXPECT_TRUE(satisfies_relations(p, r5, std::vector<Element>(p.rank(), c)));
  }
  for (const auto& h : homs) EXPECT_TRUE(satisfies_relations(p, r5, h));
}

TEST(Crossings, Parse) {
  const auto c = parse_crossing_list(data("trefoil.crossings"));
  ASSERT_EQ(c.crossings.size(), 3u);
  EXPECT_EQ(c.crossings[0].over, "b");
  EXPECT_EQ(c.crossings[0].under_in, "a");
  EXPECT_EQ(c.crossings[0].under_out, "c");
  EXPECT_EQ(c.crossings[0].sign, 1);
  EXPECT_THROW(parse_crossing_list("over=a in=b\n"), ParseError);
  EXPECT_THROW(parse_crossing_list("over=a in=b out=c sign=x\n"), ParseError);
  EXPECT_THROW(parse_crossing_list("over=a in=b out=c sign=+ extra=1\n"), ParseError);
}

TEST(Crossings, Presentations) {
  const auto tref = crossing_presentation(parse_crossing_list(data("trefoil.crossings")));
  EXPECT_EQ(tref.generators().names(), (std::vector<std::string>{"b", "a", "c"}));
  EXPECT_EQ(tref.relations().size(), 3u);
  EXPECT_EQ(coloring_count(tref, dihedral_quandle(3)).count, 9u);
  EXPECT_EQ(coloring_count(tref, dihedral_quandle(5)).count, 5u);

  const auto kink = crossing_presentation(parse_crossing_list(data("kink.crossings")));
  EXPECT_EQ(kink.rank(), 1u);
  EXPECT_EQ(coloring_count(kink, dihedral_quandle(3)).count, 3u);

  const auto empty = crossing_presentation(CrossingList{});
  EXPECT_EQ(empty.generators().names(), std::vector<std::string>{"a"});
  EXPECT_TRUE(empty.relations().empty());

  const auto minus = parse_crossing_list("over=a in=c out=b sign=-\nover=b in=a out=c sign=-\nover=c in=b out=a sign=-\n");
  EXPECT_EQ(coloring_count(crossing_presentation(minus), dihedral_quandle(3)).count, 9u);
}

TEST(Crossings, Wiring) {
  // Two separate loops.
  EXPECT_THROW(crossing_presentation(parse_crossing_list("over=a in=a out=a sign=+\nover=b in=b out=b sign=+\n")),
               MalformedInput);
  // An arc that starts twice.
  EXPECT_THROW(crossing_presentation(parse_crossing_list("over=a in=a out=b sign=+\nover=a in=a out=b sign=+\n")),
               MalformedInput);
  // An arc that never ends under a crossing.
  EXPECT_THROW(crossing_presentation(parse_crossing_list("over=c in=a out=b sign=+\n")), MalformedInput);
}

TEST(Distinguish, Examples) {
  const std::vector<FiniteQuandle> lib{trivial_quandle(2), dihedral_quandle(3), dihedral_quandle(5)};
  const auto d1 = distinguish(kTrefoil, kUnknot0, lib);
  ASSERT_TRUE(d1.index);
  EXPECT_EQ(*d1.index, 1u);
  EXPECT_EQ(d1.counts.back(), (std::pair<std::size_t, std::size_t>{9, 3}));
  const auto d2 = distinguish(kTrefoil, kFigureEight, lib);
  EXPECT_EQ(d2.index, 1u);
  const auto d3 = distinguish(kUnknot1, kUnknot0, lib);
  EXPECT_FALSE(d3.index);
  EXPECT_EQ(d3.counts.size(), 3u);
  const auto d4 = distinguish(Diagram{kTrefoil}, Diagram{parse_crossing_list(data("trefoil.crossings"))}, lib);
  EXPECT_FALSE(d4.index);
}

}  // namespace
}  // namespace quandle
