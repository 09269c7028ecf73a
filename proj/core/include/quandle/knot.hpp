#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "quandle/finite_quandle.hpp"
#include "quandle/hom_search.hpp"
#include "quandle/presentation.hpp"

namespace quandle {

/// Word in the braid group B_k; letter ±i is σ_i^{±1}, 1 <= i < k.
struct BraidWord {
  std::size_t strands = 1;
  std::vector<int> letters;
};

/// `strands=<k>` followed by whitespace-separated signed integers.
BraidWord parse_braid(std::string_view text);
/// Throws MalformedInput when strands < 1 or a letter is 0 or out of range.
void validate_braid(const BraidWord& b);

/// Number of components of the closure (cycles of the underlying permutation).
std::size_t closure_components(const BraidWord& b);

/// One generator per strand (g1..gk) and one per crossing (c1..cm). Reading
/// left to right, σ_i sends the labels (a, b) at positions (i, i+1) to (b, c)
/// with c = a * b; σ_i^{-1} sends them to (c, a) with c = b / a. Closing the
/// braid adds final_j = g_j for every position. Throws PreconditionError if
/// the closure has more than one component.
QuandlePresentation braid_presentation(const BraidWord& b);

struct Crossing {
  std::string over;
  std::string under_in;
  std::string under_out;
  int sign = 1;
};

/// Signed crossings of a knot diagram. The under-arc `under_in` becomes
/// `under_out` on passing under `over`.
struct CrossingList {
  std::vector<Crossing> crossings;
};

/// One crossing per line: `over=<arc> in=<arc> out=<arc> sign=<+|->`.
CrossingList parse_crossing_list(std::string_view text);

/// Generators are the arc names in order of first appearance; crossing
/// relations are out = in * over (sign +) or out = in / over (sign -). An
/// empty list is the one-arc diagram < a || >. Throws MalformedInput when
/// the arcs do not form a single closed strand.
QuandlePresentation crossing_presentation(const CrossingList& c);

using Diagram = std::variant<BraidWord, CrossingList>;

QuandlePresentation diagram_presentation(const Diagram& d);

ColoringCount coloring_invariant(const Diagram& d, const FiniteQuandle& f, unsigned threads = 1);

struct Distinction {
  /// First library quandle whose coloring counts differ, if any.
  std::optional<std::size_t> index;
  /// Counts for each library quandle examined, in order.
  std::vector<std::pair<std::size_t, std::size_t>> counts;
};

Distinction distinguish(const Diagram& a, const Diagram& b, std::span<const FiniteQuandle> library,
                        unsigned threads = 1);

}  // namespace quandle
