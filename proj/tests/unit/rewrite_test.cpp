#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "quandle/error.hpp"
#include "quandle/hom_search.hpp"
#include "quandle/rewrite.hpp"
#include "quandle/word_problem.hpp"
#include "test_support.hpp"

namespace quandle {
namespace {

QuandlePresentation pres(std::string_view text) { return parse_presentation(text); }
QuandleTerm term(const QuandlePresentation& p, std::string_view text) { return parse_term(text, p.generators()); }

bool closure_contains(const RewriteClosure& c, const QuandleTerm& t) {
  return std::find(c.terms.begin(), c.terms.end(), t) != c.terms.end();
}

std::vector<FiniteQuandle> small_library() {
  return {dihedral_quandle(3), dihedral_quandle(4), dihedral_quandle(5), conj_quandle(FiniteGroup::symmetric(3)),
          trivial_quandle(2)};
}

TEST(Rewrite, ClosureExamples) {
  const auto free2 = pres("gens: x y\n");
  const auto x = term(free2, "x");
  const auto c1 = rewrite_closure(free2, term(free2, "(x * x)"), 1);
  EXPECT_TRUE(closure_contains(c1, x));
  EXPECT_TRUE(c1.budget_exhausted);
  EXPECT_EQ(c1.expansions, 1u);
  EXPECT_TRUE(closure_contains(rewrite_closure(free2, term(free2, "((x * y) / y)"), 1), x));
  EXPECT_TRUE(closure_contains(rewrite_closure(free2, term(free2, "((x / y) * y)"), 1), x));

  const auto rel = pres("gens: x y\nrel: x = y\n");
  EXPECT_TRUE(closure_contains(rewrite_closure(rel, term(rel, "x"), 1), term(rel, "y")));
  EXPECT_FALSE(closure_contains(rewrite_closure(free2, term(free2, "x"), 50), term(free2, "y")));

  const auto c0 = rewrite_closure(free2, x, 0);
  EXPECT_EQ(c0.terms.size(), 1u);
  EXPECT_TRUE(c0.budget_exhausted);
}

TEST(Rewrite, Distribution) {
  const auto p = pres("gens: x y z\n");
  const auto lhs = term(p, "((x * y) * z)");
  const auto rhs = term(p, "((x * z) * (y * z))");
  const auto succ = successors(p, lhs);
  const bool found = std::any_of(succ.begin(), succ.end(), [&](const auto& s) {
    return s.first.kind == RuleKind::Distribute && s.second == rhs;
  });
  EXPECT_TRUE(found);
  const auto back = successors(p, rhs);
  EXPECT_TRUE(std::any_of(back.begin(), back.end(), [&](const auto& s) {
    return s.first.kind == RuleKind::Collect && s.second == lhs;
  }));
  // Mixed operations.
  EXPECT_TRUE(closure_contains(rewrite_closure(p, term(p, "((x / y) * z)"), 1), term(p, "((x * z) / (y * z))")));
}

TEST(Rewrite, SuccessorsReplayAndDescribe) {
  const auto p = pres("gens: x y\nrel: (x * y) = y\n");
  std::mt19937_64 rng(31);
  for (int i = 0; i < 50; ++i) {
    const auto t = testing::random_term(rng, 2, 3);
    for (const auto& [step, next] : successors(p, t)) {
      EXPECT_EQ(apply_step(p, t, step), next);
      EXPECT_EQ(replay(p, t, {step}), next);
      EXPECT_FALSE(describe_step(step, p).empty());
    }
  }
  const RewriteStep bad{RuleKind::IdempotenceContract, 0, {}};
  EXPECT_FALSE(apply_step(p, term(p, "x"), bad).has_value());
  EXPECT_THROW(replay(p, term(p, "x"), {bad}), PreconditionError);
  EXPECT_EQ(describe_step(bad, p), "idempotence (t*t -> t) at root");
}

TEST(Rewrite, StepsPreserveValueInEveryModel) {
  const auto p = pres("gens: x y z\nrel: z = (x * y)\nrel: x = (y * z)\nrel: y = (z * x)\n");
  const auto r3 = dihedral_quandle(3);
  const auto colorings = hom_enumerate(p, r3);
  std::mt19937_64 rng(32);
  for (int i = 0; i < 40; ++i) {
    const auto t = testing::random_term(rng, 3, 3);
    const auto c = rewrite_closure(p, t, 30);
    for (const auto& u : c.terms) {
      for (const auto& a : colorings) EXPECT_EQ(eval_term(u, r3, a), eval_term(t, r3, a));
    }
  }
}

TEST(Rewrite, ExplorerTraces) {
  const auto p = pres("gens: x y\n");
  RewriteExplorer ex(p, term(p, "((x * y) / y)"));
  const auto target = term(p, "x");
  ex.expand(100, &target);
  ASSERT_TRUE(ex.contains(target));
  EXPECT_EQ(ex.terms().front(), term(p, "((x * y) / y)"));
  const auto trace = ex.trace_to(target);
  EXPECT_EQ(replay(p, ex.terms().front(), trace), target);
  EXPECT_EQ(trace.size(), 1u);
}

TEST(Decide, Examples) {
  const auto free2 = pres("gens: x y\n");
  const auto lib = small_library();
  const auto d1 = decide_equal(free2, term(free2, "(x * x)"), term(free2, "x"), 100, lib);
  EXPECT_EQ(d1.verdict, Verdict::Equal);
  ASSERT_TRUE(d1.trace);
  EXPECT_EQ(d1.trace->size(), 1u);

  const auto d2 = decide_equal(free2, term(free2, "x"), term(free2, "y"), 100, lib);
  EXPECT_EQ(d2.verdict, Verdict::Distinct);
  ASSERT_TRUE(d2.witness);
  const auto& w = *d2.witness;
  EXPECT_NE(w.first_value, w.second_value);
  EXPECT_EQ(eval_term(term(free2, "x"), lib[w.library_index], w.assignment), w.first_value);

  const auto d3 = decide_equal(free2, term(free2, "x"), term(free2, "y"), 0, {});
  EXPECT_EQ(d3.verdict, Verdict::Unknown);
  EXPECT_FALSE(d3.trace);
  EXPECT_FALSE(d3.witness);

  const auto d4 = decide_equal(free2, term(free2, "(x * y)"), term(free2, "(x * y)"), 0, {});
  EXPECT_EQ(d4.verdict, Verdict::Equal);
  EXPECT_TRUE(d4.trace->empty());

  EXPECT_STREQ(verdict_name(Verdict::Equal), "EQUAL");
  EXPECT_STREQ(verdict_name(Verdict::Distinct), "DISTINCT");
  EXPECT_STREQ(verdict_name(Verdict::Unknown), "UNKNOWN");
}

TEST(Decide, RelationsAreUsed) {
  const auto tri = pres("gens: x y z\nrel: z = (x * y)\nrel: x = (y * z)\nrel: y = (z * x)\n");
  const auto d = decide_equal(tri, term(tri, "(x * y)"), term(tri, "z"), 100, small_library());
  EXPECT_EQ(d.verdict, Verdict::Equal);
  EXPECT_EQ(replay(tri, term(tri, "(x * y)"), *d.trace), term(tri, "z"));
  // x and y are distinguished by a three-coloring.
  EXPECT_EQ(decide_equal(tri, term(tri, "x"), term(tri, "y"), 50, small_library()).verdict, Verdict::Distinct);
}

TEST(Decide, AgreesWithFreeQuandleNormalForms) {
  const auto p = pres("gens: a b\n");
  const auto lib = small_library();
  std::mt19937_64 rng(33);
  int equal = 0;
  int distinct = 0;
  for (int i = 0; i < 150; ++i) {
    const auto t1 = testing::random_term(rng, 2, 2);
    // Half the cases are rewrites of t1, so both verdicts occur.
    QuandleTerm t2 = testing::random_term(rng, 2, 2);
    if (i % 2 == 0) {
      const auto succ = successors(p, t1);
      t2 = succ[rng() % succ.size()].second;
    }
    const auto d = decide_equal(p, t1, t2, 200, lib);
    const bool truth = fq_equal(eval_free(t1), eval_free(t2));
    if (d.verdict == Verdict::Equal) {
      ++equal;
      EXPECT_TRUE(truth);
      EXPECT_EQ(replay(p, t1, *d.trace), t2);
    } else if (d.verdict == Verdict::Distinct) {
      ++distinct;
      EXPECT_FALSE(truth);
      const auto& w = *d.witness;
      EXPECT_NE(eval_term(t1, lib[w.library_index], w.assignment),
                eval_term(t2, lib[w.library_index], w.assignment));
    }
  }
  EXPECT_GT(equal, 40);
  EXPECT_GT(distinct, 20);
}

}  // namespace
}  // namespace quandle
