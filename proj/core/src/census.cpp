#include "quandle/census.hpp"

#include <cstdint>

#include "quandle/error.hpp"

namespace quandle {

namespace {

constexpr int kFree = -1;

// Fills the table cell by cell, column-major. Each column y is kept a
// partial permutation with y fixed at y; after each assignment every
// distributivity triple whose five cells are now all known is checked.
class CensusSearch {
 public:
  CensusSearch(std::size_t n, const std::function<void(const FiniteQuandle&)>& visit)
      : n_(static_cast<int>(n)), visit_(visit), cell_(n * n, kFree), inv_(n * n, kFree), used_(n, 0) {
    for (int y = 0; y < n_; ++y) set(y, y, y);
    for (int y = 0; y < n_; ++y) {
      for (int x = 0; x < n_; ++x) {
        if (x != y) order_.push_back({x, y});
      }
    }
  }

  void run() { descend(0); }

 private:
  int& at(int x, int y) { return cell_[x * n_ + y]; }
  int get(int x, int y) const { return cell_[x * n_ + y]; }

  void set(int x, int y, int v) {
    at(x, y) = v;
    inv_[v * n_ + y] = x;
    used_[y] |= 1u << v;
  }

  void unset(int x, int y) {
    const int v = get(x, y);
    at(x, y) = kFree;
    inv_[v * n_ + y] = kFree;
    used_[y] &= ~(1u << v);
  }

  bool triple_ok(int a, int b, int c) const {
    const int ab = get(a, b), ac = get(a, c), bc = get(b, c);
    if (ab == kFree || ac == kFree || bc == kFree) return true;
    const int lhs = get(ab, c), rhs = get(ac, bc);
    return lhs == kFree || rhs == kFree || lhs == rhs;
  }

  bool consistent_after(int x, int y) const {
    for (int c = 0; c < n_; ++c) {
      if (!triple_ok(x, y, c)) return false;  // (x, y) as a*b
      if (!triple_ok(x, c, y)) return false;  // (x, y) as a*c
      if (!triple_ok(c, x, y)) return false;  // (x, y) as b*c
      const int a = inv_[x * n_ + c], b = inv_[y * n_ + c];
      if (a != kFree && b != kFree && !triple_ok(a, b, c)) return false;  // (a*c)*(b*c)
    }
    for (int a = 0; a < n_; ++a) {  // (x, y) as (a*b)*c
      for (int b = 0; b < n_; ++b) {
        if (get(a, b) == x && !triple_ok(a, b, y)) return false;
      }
    }
    return true;
  }

  void descend(std::size_t k) {
    if (k == order_.size()) {
      emit();
      return;
    }
    const auto [x, y] = order_[k];
    for (int v = 0; v < n_; ++v) {
      if (used_[y] & (1u << v)) continue;
      set(x, y, v);
      if (consistent_after(x, y)) descend(k + 1);
      unset(x, y);
    }
  }

  void emit() {
    Table t(n_, std::vector<Element>(n_));
    for (int x = 0; x < n_; ++x) {
      for (int y = 0; y < n_; ++y) t[x][y] = static_cast<Element>(get(x, y));
    }
    visit_(FiniteQuandle::verify(t));
  }

  int n_;
  const std::function<void(const FiniteQuandle&)>& visit_;
  std::vector<int> cell_;
  std::vector<int> inv_;  // inv_[v*n + y] = x with x*y = v
  std::vector<std::uint32_t> used_;
  std::vector<std::pair<int, int>> order_;
};

}  // namespace

void for_each_quandle(std::size_t order, const std::function<void(const FiniteQuandle&)>& visit) {
  if (order == 0) throw PreconditionError("census order must be positive");
  if (order > kMaxCensusOrder) {
    throw PreconditionError("census order " + std::to_string(order) + " exceeds the cap of " +
                            std::to_string(kMaxCensusOrder));
  }
  CensusSearch(order, visit).run();
}

std::vector<FiniteQuandle> quandle_census(std::size_t max_order) {
  if (max_order > kMaxCensusOrder) {
    throw PreconditionError("census order " + std::to_string(max_order) + " exceeds the cap of " +
                            std::to_string(kMaxCensusOrder));
  }
  std::vector<FiniteQuandle> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    for_each_quandle(n, [&](const FiniteQuandle& q) { out.push_back(q); });
  }
  return out;
}

std::vector<std::size_t> census_counts(std::size_t max_order) {
  if (max_order > kMaxCensusOrder) {
    throw PreconditionError("census order " + std::to_string(max_order) + " exceeds the cap of " +
                            std::to_string(kMaxCensusOrder));
  }
  std::vector<std::size_t> counts;
  for (std::size_t n = 1; n <= max_order; ++n) {
    std::size_t c = 0;
    for_each_quandle(n, [&](const FiniteQuandle&) { ++c; });
    counts.push_back(c);
  }
  return counts;
}

}  // namespace quandle
