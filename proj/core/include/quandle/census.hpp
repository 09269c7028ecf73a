#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "quandle/finite_quandle.hpp"

namespace quandle {

inline constexpr std::size_t kMaxCensusOrder = 6;

/// Visits every quandle table of the given order (labelled, not up to
/// isomorphism) in a fixed order. Throws PreconditionError above
/// kMaxCensusOrder.
void for_each_quandle(std::size_t order, const std::function<void(const FiniteQuandle&)>& visit);

/// All quandle tables of orders 1..max_order, grouped by order.
std::vector<FiniteQuandle> quandle_census(std::size_t max_order);

/// counts[k-1] = number of quandle tables of order k.
std::vector<std::size_t> census_counts(std::size_t max_order);

}  // namespace quandle
