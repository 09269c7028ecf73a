#include "quandle/rewrite.hpp"

#include "quandle/error.hpp"

namespace quandle {

namespace {

/// ((x∘y)•z) -> ((x•z)∘(y•z))
std::optional<QuandleTerm> distribute(const QuandleTerm& t) {
  if (t.is_leaf() || t.left().is_leaf()) return std::nullopt;
  const Op outer = t.op();
  const QuandleTerm& inner = t.left();
  const QuandleTerm& z = t.right();
  return QuandleTerm::node(inner.op(), QuandleTerm::node(outer, inner.left(), z),
                           QuandleTerm::node(outer, inner.right(), z));
}

/// ((x•z)∘(y•z)) -> ((x∘y)•z)
std::optional<QuandleTerm> collect(const QuandleTerm& t) {
  if (t.is_leaf() || t.left().is_leaf() || t.right().is_leaf()) return std::nullopt;
  const QuandleTerm& a = t.left();
  const QuandleTerm& b = t.right();
  if (a.op() != b.op() || !(a.right() == b.right())) return std::nullopt;
  return QuandleTerm::node(a.op(), QuandleTerm::node(t.op(), a.left(), b.left()), a.right());
}

std::optional<QuandleTerm> rewrite_here(const QuandlePresentation& p, const QuandleTerm& t,
                                        RuleKind kind, std::size_t arg) {
  switch (kind) {
    case RuleKind::RelationForward:
    case RuleKind::RelationBackward: {
      if (arg >= p.relations().size()) return std::nullopt;
      const Relation& r = p.relations()[arg];
      const bool forward = kind == RuleKind::RelationForward;
      if (t == (forward ? r.lhs : r.rhs)) return forward ? r.rhs : r.lhs;
      return std::nullopt;
    }
    case RuleKind::IdempotenceContract:
      if (!t.is_leaf() && t.op() == Op::Star && t.left() == t.right()) return t.left();
      return std::nullopt;
    case RuleKind::IdempotenceExpand:
      return QuandleTerm::star(t, t);
    case RuleKind::CancelContract:
      if (!t.is_leaf() && !t.left().is_leaf() && t.left().op() != t.op() &&
          t.left().right() == t.right()) {
        return t.left().left();
      }
      return std::nullopt;
    case RuleKind::CancelExpandStar:
      if (arg >= p.rank()) return std::nullopt;
      return QuandleTerm::star_inv(QuandleTerm::star(t, QuandleTerm::leaf(arg)), QuandleTerm::leaf(arg));
    case RuleKind::CancelExpandInv:
      if (arg >= p.rank()) return std::nullopt;
      return QuandleTerm::star(QuandleTerm::star_inv(t, QuandleTerm::leaf(arg)), QuandleTerm::leaf(arg));
    case RuleKind::Distribute:
      return distribute(t);
    case RuleKind::Collect:
      return collect(t);
  }
  return std::nullopt;
}

void collect_successors(const QuandlePresentation& p, const QuandleTerm& root, const QuandleTerm& here,
                        TermPosition& pos, std::vector<std::pair<RewriteStep, QuandleTerm>>& out) {
  auto emit = [&](RuleKind kind, std::size_t arg) {
    if (auto r = rewrite_here(p, here, kind, arg)) {
      out.emplace_back(RewriteStep{kind, arg, pos}, replace_at(root, pos, *r));
    }
  };
  for (std::size_t i = 0; i < p.relations().size(); ++i) {
    emit(RuleKind::RelationForward, i);
    emit(RuleKind::RelationBackward, i);
  }
  emit(RuleKind::IdempotenceContract, 0);
  emit(RuleKind::CancelContract, 0);
  emit(RuleKind::Distribute, 0);
  emit(RuleKind::Collect, 0);
  emit(RuleKind::IdempotenceExpand, 0);
  for (std::size_t g = 0; g < p.rank(); ++g) {
    emit(RuleKind::CancelExpandStar, g);
    emit(RuleKind::CancelExpandInv, g);
  }
  if (!here.is_leaf()) {
    for (std::uint8_t side = 0; side < 2; ++side) {
      pos.push_back(side);
      collect_successors(p, root, here.child(side), pos, out);
      pos.pop_back();
    }
  }
}

}  // namespace

std::string describe_step(const RewriteStep& step, const QuandlePresentation& p) {
  std::string out;
  switch (step.kind) {
    case RuleKind::RelationForward:
      out = "relation " + std::to_string(step.arg) + " (lhs -> rhs)";
      break;
    case RuleKind::RelationBackward:
      out = "relation " + std::to_string(step.arg) + " (rhs -> lhs)";
      break;
    case RuleKind::IdempotenceContract:
      out = "idempotence (t*t -> t)";
      break;
    case RuleKind::IdempotenceExpand:
      out = "idempotence (t -> t*t)";
      break;
    case RuleKind::CancelContract:
      out = "cancellation (contract)";
      break;
    case RuleKind::CancelExpandStar:
      out = "cancellation (t -> (t*" + p.generators().name(step.arg) + ")/" + p.generators().name(step.arg) + ")";
      break;
    case RuleKind::CancelExpandInv:
      out = "cancellation (t -> (t/" + p.generators().name(step.arg) + ")*" + p.generators().name(step.arg) + ")";
      break;
    case RuleKind::Distribute:
      out = "distributivity (distribute)";
      break;
    case RuleKind::Collect:
      out = "distributivity (collect)";
      break;
  }
  out += " at ";
  if (step.position.empty()) {
    out += "root";
  } else {
    for (auto s : step.position) out += s ? 'R' : 'L';
  }
  return out;
}

std::optional<QuandleTerm> apply_step(const QuandlePresentation& p, const QuandleTerm& t,
                                      const RewriteStep& step) {
  const QuandleTerm* here = &t;
  for (auto s : step.position) {
    if (here->is_leaf() || s > 1) return std::nullopt;
    here = &here->child(s);
  }
  auto r = rewrite_here(p, *here, step.kind, step.arg);
  if (!r) return std::nullopt;
  return replace_at(t, step.position, *r);
}

std::vector<std::pair<RewriteStep, QuandleTerm>> successors(const QuandlePresentation& p,
                                                            const QuandleTerm& t) {
  std::vector<std::pair<RewriteStep, QuandleTerm>> out;
  TermPosition pos;
  collect_successors(p, t, t, pos, out);
  return out;
}

QuandleTerm replay(const QuandlePresentation& p, const QuandleTerm& start,
                   const std::vector<RewriteStep>& steps) {
  QuandleTerm cur = start;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    auto next = apply_step(p, cur, steps[i]);
    if (!next) throw PreconditionError("trace step " + std::to_string(i) + " does not apply");
    cur = std::move(*next);
  }
  return cur;
}

RewriteExplorer::RewriteExplorer(const QuandlePresentation& p, QuandleTerm start) : p_(p) {
  index_.emplace(start, 0);
  entries_.push_back({std::move(start), 0, {}});
}

std::size_t RewriteExplorer::expand(std::size_t max_expansions, const QuandleTerm* target) {
  std::size_t done = 0;
  while (done < max_expansions && next_ < entries_.size()) {
    if (target && contains(*target)) break;
    const std::size_t cur = next_++;
    const QuandleTerm term = entries_[cur].term;
    ++done;
    ++expansions_;
    for (auto& [step, result] : successors(p_, term)) {
      if (index_.contains(result)) continue;
      index_.emplace(result, entries_.size());
      entries_.push_back({std::move(result), cur, std::move(step)});
    }
  }
  return done;
}

std::vector<QuandleTerm> RewriteExplorer::terms() const {
  std::vector<QuandleTerm> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.term);
  return out;
}

std::vector<RewriteStep> RewriteExplorer::trace_to(const QuandleTerm& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) throw PreconditionError("term has not been reached");
  std::vector<RewriteStep> steps;
  for (std::size_t i = it->second; i != 0; i = entries_[i].parent) steps.push_back(entries_[i].step);
  return {steps.rbegin(), steps.rend()};
}

RewriteClosure rewrite_closure(const QuandlePresentation& p, const QuandleTerm& start,
                               std::size_t budget) {
  RewriteExplorer explorer(p, start);
  explorer.expand(budget);
  return {explorer.terms(), explorer.expansions(), !explorer.frontier_empty()};
}

}  // namespace quandle
