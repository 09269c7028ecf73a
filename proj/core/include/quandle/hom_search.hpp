#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "quandle/finite_quandle.hpp"
#include "quandle/presentation.hpp"

namespace quandle {

/// True iff every relation of `p` holds under `images`.
bool satisfies_relations(const QuandlePresentation& p, const FiniteQuandle& f,
                         std::span<const Element> images);

/// Visits Hom(Q, F) for Q = p in lexicographic order of the image tuple,
/// stopping early when `visit` returns false. Backtracks over generator
/// images, checking each relation as soon as its last generator is assigned.
void for_each_hom(const QuandlePresentation& p, const FiniteQuandle& f,
                  const std::function<bool(std::span<const Element>)>& visit);

/// All homomorphisms, sorted lexicographically. With threads > 1 the search
/// is split on the image of the first generator; the output is identical.
std::vector<Assignment> hom_enumerate(const QuandlePresentation& p, const FiniteQuandle& f,
                                      unsigned threads = 1);

struct ColoringCount {
  std::size_t count = 0;
  /// Some homomorphism takes two generators to different elements.
  bool non_constant = false;
};

ColoringCount coloring_count(const QuandlePresentation& p, const FiniteQuandle& f,
                             unsigned threads = 1);

}  // namespace quandle
