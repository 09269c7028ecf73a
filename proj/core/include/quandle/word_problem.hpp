#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "quandle/finite_quandle.hpp"
#include "quandle/presentation.hpp"
#include "quandle/rewrite.hpp"

namespace quandle {

enum class Verdict { Equal, Distinct, Unknown };

const char* verdict_name(Verdict v) noexcept;

struct DistinctWitness {
  std::size_t library_index = 0;
  Assignment assignment;
  Element first_value = 0;
  Element second_value = 0;
};

struct DecideOutcome {
  Verdict verdict = Verdict::Unknown;
  /// Set for Equal: replaying it from t1 yields t2.
  std::optional<std::vector<RewriteStep>> trace;
  /// Set for Distinct: a homomorphism to a library quandle separating t1, t2.
  std::optional<DistinctWitness> witness;
  std::size_t expansions = 0;
  std::size_t quandles_checked = 0;
  std::size_t homs_checked = 0;
};

struct DecideOptions {
  /// Rewrite expansions per turn of the equality search.
  std::size_t slice = 64;
};

/// Semi-decides t1 = t2 in < X || R > by alternating two searches: a
/// breadth-first rewrite closure from t1 (at most `budget` expansions in
/// slices of `options.slice`), and an enumeration of homomorphisms into the
/// library quandles, one library quandle per turn. The rewrite search runs
/// first in each round. Witnesses are re-checked before they are returned.
DecideOutcome decide_equal(const QuandlePresentation& p, const QuandleTerm& t1, const QuandleTerm& t2,
                           std::size_t budget, std::span<const FiniteQuandle> library,
                           DecideOptions options = {});

}  // namespace quandle
