#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quandle/free_group.hpp"
#include "quandle/term.hpp"

namespace quandle {

struct Relation {
  QuandleTerm lhs;
  QuandleTerm rhs;
};

/// Q = < X || R >.
class QuandlePresentation {
 public:
  /// Throws MalformedInput if `generators` is empty or a relation mentions
  /// a generator index outside it.
  QuandlePresentation(GeneratorSet generators, std::vector<Relation> relations);

  const GeneratorSet& generators() const noexcept { return generators_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  std::size_t rank() const noexcept { return generators_.size(); }

 private:
  GeneratorSet generators_;
  std::vector<Relation> relations_;
};

/// File format: a line `gens: x y z`, then zero or more `rel: <term> = <term>`
/// lines. Blank lines and `#` comments are ignored.
QuandlePresentation parse_presentation(std::string_view text);
std::string format_presentation(const QuandlePresentation& p);

/// G_Q = < X | R̄ > with every x*y in R replaced by y^{-1} x y.
GroupPresentation enveloping_presentation(const QuandlePresentation& p);

}  // namespace quandle
