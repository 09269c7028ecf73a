#include "quandle/presentation.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "quandle/error.hpp"

namespace quandle {

QuandlePresentation::QuandlePresentation(GeneratorSet generators, std::vector<Relation> relations)
    : generators_(std::move(generators)), relations_(std::move(relations)) {
  if (generators_.empty()) throw MalformedInput("a presentation needs at least one generator");
  for (const Relation& r : relations_) {
    if (r.lhs.generator_bound() > generators_.size() || r.rhs.generator_bound() > generators_.size()) {
      throw MalformedInput("relation refers to a generator outside the presentation");
    }
  }
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

QuandlePresentation parse_presentation(std::string_view text) {
  std::optional<GeneratorSet> gens;
  std::vector<Relation> relations;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    const std::size_t offset = line_start;
    line_start = line_end + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;

    const std::size_t lead = line.find_first_not_of(" \t\r");
    std::string_view body = line.substr(lead);
    if (body.starts_with("gens:")) {
      if (gens) throw ParseError("duplicate 'gens:' line", offset + lead);
      std::vector<std::string> names;
      std::istringstream in{std::string(body.substr(5))};
      for (std::string name; in >> name;) names.push_back(name);
      try {
        gens = GeneratorSet(std::move(names));
      } catch (const MalformedInput& e) {
        throw ParseError(e.what(), offset + lead);
      }
    } else if (body.starts_with("rel:")) {
      if (!gens) throw ParseError("'rel:' before 'gens:'", offset + lead);
      const std::string_view rel = body.substr(4);
      const std::size_t eq = rel.find('=');
      if (eq == std::string_view::npos) throw ParseError("relation lacks '='", offset + lead);
      const std::size_t base = offset + lead + 4;
      auto parse_side = [&](std::string_view side, std::size_t side_offset) {
        try {
          return parse_term(side, *gens);
        } catch (const ParseError& e) {
          throw ParseError(e.message(), base + side_offset + e.position());
        }
      };
      QuandleTerm lhs = parse_side(rel.substr(0, eq), 0);
      QuandleTerm rhs = parse_side(rel.substr(eq + 1), eq + 1);
      relations.push_back({std::move(lhs), std::move(rhs)});
    } else {
      throw ParseError("expected 'gens:' or 'rel:'", offset + lead);
    }
  }
  if (!gens) throw ParseError("missing 'gens:' line", 0);
  try {
    return QuandlePresentation(std::move(*gens), std::move(relations));
  } catch (const MalformedInput& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string format_presentation(const QuandlePresentation& p) {
  std::string out = "gens:";
  for (const auto& name : p.generators().names()) out += " " + name;
  out += '\n';
  for (const Relation& r : p.relations()) {
    out += "rel: " + format_term(r.lhs, p.generators()) + " = " + format_term(r.rhs, p.generators()) + '\n';
  }
  return out;
}

GroupPresentation enveloping_presentation(const QuandlePresentation& p) {
  GroupPresentation out{p.generators(), {}};
  for (const Relation& r : p.relations()) {
    out.relations.emplace_back(to_group_word(r.lhs), to_group_word(r.rhs));
  }
  return out;
}

}  // namespace quandle
