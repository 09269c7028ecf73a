#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "quandle/presentation.hpp"
#include "quandle/term.hpp"

namespace quandle {

/// Rewrite rules available to the equality search. Relation rules replace an
/// occurrence of one side of a defining relation by the other; the rest are
/// the quandle axioms, each usable in both directions:
///   idempotence     (t*t) <-> t
///   cancellation    ((t*u)/u) <-> t  and  ((t/u)*u) <-> t
///   distributivity  ((x∘y)•z) <-> ((x•z)∘(y•z))  for ∘, • in {*, /}
enum class RuleKind : std::uint8_t {
  RelationForward,      // lhs -> rhs of relation `arg`
  RelationBackward,     // rhs -> lhs of relation `arg`
  IdempotenceContract,  // (t*t) -> t
  IdempotenceExpand,    // t -> (t*t)
  CancelContract,       // ((t*u)/u) -> t, ((t/u)*u) -> t
  CancelExpandStar,     // t -> ((t*u)/u), u = generator `arg`
  CancelExpandInv,      // t -> ((t/u)*u), u = generator `arg`
  Distribute,           // ((x∘y)•z) -> ((x•z)∘(y•z))
  Collect,              // ((x•z)∘(y•z)) -> ((x∘y)•z)
};

struct RewriteStep {
  RuleKind kind = RuleKind::IdempotenceContract;
  std::size_t arg = 0;
  TermPosition position;

  friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

std::string describe_step(const RewriteStep& step, const QuandlePresentation& p);

/// The term obtained by applying `step` to `t`, or nullopt when the rule does
/// not match at that position.
std::optional<QuandleTerm> apply_step(const QuandlePresentation& p, const QuandleTerm& t,
                                      const RewriteStep& step);

/// Every one-step rewrite of `t`, positions in preorder and rules in
/// declaration order at each position.
std::vector<std::pair<RewriteStep, QuandleTerm>> successors(const QuandlePresentation& p,
                                                            const QuandleTerm& t);

/// Re-applies `steps` from `start`; throws PreconditionError at the first
/// step that does not match.
QuandleTerm replay(const QuandlePresentation& p, const QuandleTerm& start,
                   const std::vector<RewriteStep>& steps);

/// Incremental breadth-first exploration of the terms reachable from a start
/// term. One expansion pops a term and records all its successors.
class RewriteExplorer {
 public:
  RewriteExplorer(const QuandlePresentation& p, QuandleTerm start);

  /// Performs up to `max_expansions` expansions, stopping early once `target`
  /// (if given) has been reached. Returns the number performed.
  std::size_t expand(std::size_t max_expansions, const QuandleTerm* target = nullptr);

  bool contains(const QuandleTerm& t) const { return index_.contains(t); }
  /// All terms reached so far, in discovery order; terms()[0] is the start.
  std::vector<QuandleTerm> terms() const;
  std::size_t expansions() const noexcept { return expansions_; }
  bool frontier_empty() const noexcept { return next_ == entries_.size(); }

  /// Steps leading from the start to `t`; `t` must have been reached.
  std::vector<RewriteStep> trace_to(const QuandleTerm& t) const;

 private:
  struct Entry {
    QuandleTerm term;
    std::size_t parent;
    RewriteStep step;
  };

  const QuandlePresentation& p_;
  std::vector<Entry> entries_;
  std::unordered_map<QuandleTerm, std::size_t, QuandleTermHash> index_;
  std::size_t next_ = 0;
  std::size_t expansions_ = 0;
};

struct RewriteClosure {
  std::vector<QuandleTerm> terms;
  std::size_t expansions = 0;
  /// The cap stopped the search before the frontier ran out.
  bool budget_exhausted = false;
};

RewriteClosure rewrite_closure(const QuandlePresentation& p, const QuandleTerm& start,
                               std::size_t budget);

}  // namespace quandle
