#include "quandle/word_problem.hpp"

#include <algorithm>

#include "quandle/error.hpp"
#include "quandle/hom_search.hpp"

namespace quandle {

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::Equal:
      return "EQUAL";
    case Verdict::Distinct:
      return "DISTINCT";
    case Verdict::Unknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

DecideOutcome decide_equal(const QuandlePresentation& p, const QuandleTerm& t1, const QuandleTerm& t2,
                           std::size_t budget, std::span<const FiniteQuandle> library,
                           DecideOptions options) {
  if (t1.generator_bound() > p.rank() || t2.generator_bound() > p.rank()) {
    throw MalformedInput("term refers to a generator outside the presentation");
  }
  const std::size_t slice = std::max<std::size_t>(options.slice, 1);

  DecideOutcome out;
  RewriteExplorer explorer(p, t1);
  std::size_t next_quandle = 0;

  auto equal_found = [&]() {
    auto trace = explorer.trace_to(t2);
    if (!(replay(p, t1, trace) == t2)) throw Error("internal: rewrite trace does not replay");
    out.verdict = Verdict::Equal;
    out.trace = std::move(trace);
    out.expansions = explorer.expansions();
    return out;
  };

  if (explorer.contains(t2)) return equal_found();

  while (true) {
    const bool rewriting_live = explorer.expansions() < budget && !explorer.frontier_empty();
    const bool library_live = next_quandle < library.size();
    if (!rewriting_live && !library_live) break;

    if (rewriting_live) {
      explorer.expand(std::min(slice, budget - explorer.expansions()), &t2);
      if (explorer.contains(t2)) return equal_found();
    }

    if (library_live) {
      const std::size_t qi = next_quandle++;
      const FiniteQuandle& f = library[qi];
      ++out.quandles_checked;
      std::optional<DistinctWitness> found;
      for_each_hom(p, f, [&](std::span<const Element> images) {
        ++out.homs_checked;
        const Element v1 = eval_term(t1, f, images);
        const Element v2 = eval_term(t2, f, images);
        if (v1 == v2) return true;
        found = DistinctWitness{qi, Assignment(images.begin(), images.end()), v1, v2};
        return false;
      });
      if (found) {
        if (!satisfies_relations(p, f, found->assignment) ||
            eval_term(t1, f, found->assignment) == eval_term(t2, f, found->assignment)) {
          throw Error("internal: separating assignment failed re-check");
        }
        out.verdict = Verdict::Distinct;
        out.witness = std::move(found);
        out.expansions = explorer.expansions();
        return out;
      }
    }
  }
  out.expansions = explorer.expansions();
  return out;
}

}  // namespace quandle
