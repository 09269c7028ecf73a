#include "quandle/knot.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <map>
#include <sstream>

#include "quandle/error.hpp"

namespace quandle {

void validate_braid(const BraidWord& b) {
  if (b.strands < 1) throw MalformedInput("a braid needs at least one strand");
  for (int l : b.letters) {
    const auto mag = static_cast<std::size_t>(std::abs(l));
    if (l == 0 || mag >= b.strands) {
      throw MalformedInput("braid letter " + std::to_string(l) + " out of range for " +
                           std::to_string(b.strands) + " strands");
    }
  }
}

BraidWord parse_braid(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto token = [&] {
    skip();
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::pair{text.substr(start, pos - start), start};
  };

  auto [head, head_pos] = token();
  if (!head.starts_with("strands=")) throw ParseError("braid must start with 'strands=<k>'", head_pos);
  long long k = 0;
  const auto digits = head.substr(8);
  auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc() || p != digits.data() + digits.size()) {
    throw ParseError("bad strand count", head_pos + 8);
  }
  if (k < 1) throw ParseError("a braid needs at least one strand", head_pos + 8);

  BraidWord b;
  b.strands = static_cast<std::size_t>(k);
  while (true) {
    auto [tok, tok_pos] = token();
    if (tok.empty()) break;
    int v = 0;
    const char* first = tok.data();
    if (*first == '+') ++first;
    auto [q, ec2] = std::from_chars(first, tok.data() + tok.size(), v);
    if (ec2 != std::errc() || q != tok.data() + tok.size()) {
      throw ParseError("bad braid letter '" + std::string(tok) + "'", tok_pos);
    }
    if (v == 0 || static_cast<std::size_t>(std::abs(v)) >= b.strands) {
      throw ParseError("braid letter " + std::to_string(v) + " out of range", tok_pos);
    }
    b.letters.push_back(v);
  }
  return b;
}

std::size_t closure_components(const BraidWord& b) {
  validate_braid(b);
  // perm[p] = starting strand currently at position p.
  std::vector<std::size_t> perm(b.strands);
  for (std::size_t i = 0; i < b.strands; ++i) perm[i] = i;
  for (int l : b.letters) {
    const auto i = static_cast<std::size_t>(std::abs(l)) - 1;
    std::swap(perm[i], perm[i + 1]);
  }
  std::vector<bool> seen(b.strands, false);
  std::size_t cycles = 0;
  for (std::size_t s = 0; s < b.strands; ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t p = s; !seen[p]; p = perm[p]) seen[p] = true;
  }
  return cycles;
}

QuandlePresentation braid_presentation(const BraidWord& b) {
  const std::size_t components = closure_components(b);
  if (components != 1) {
    throw PreconditionError("braid closure has " + std::to_string(components) +
                            " components; only knots are supported");
  }
  std::vector<std::string> names;
  for (std::size_t j = 1; j <= b.strands; ++j) names.push_back("g" + std::to_string(j));
  for (std::size_t c = 1; c <= b.letters.size(); ++c) names.push_back("c" + std::to_string(c));

  std::vector<std::size_t> state(b.strands);
  for (std::size_t j = 0; j < b.strands; ++j) state[j] = j;

  std::vector<Relation> relations;
  std::size_t fresh = b.strands;
  for (int l : b.letters) {
    const auto i = static_cast<std::size_t>(std::abs(l)) - 1;
    const auto a = QuandleTerm::leaf(state[i]);
    const auto bb = QuandleTerm::leaf(state[i + 1]);
    const std::size_t c = fresh++;
    if (l > 0) {
      relations.push_back({QuandleTerm::leaf(c), QuandleTerm::star(a, bb)});
      state[i] = state[i + 1];
      state[i + 1] = c;
    } else {
      relations.push_back({QuandleTerm::leaf(c), QuandleTerm::star_inv(bb, a)});
      state[i + 1] = state[i];
      state[i] = c;
    }
  }
  for (std::size_t j = 0; j < b.strands; ++j) {
    relations.push_back({QuandleTerm::leaf(state[j]), QuandleTerm::leaf(j)});
  }
  return QuandlePresentation(GeneratorSet(std::move(names)), std::move(relations));
}

CrossingList parse_crossing_list(std::string_view text) {
  CrossingList out;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    const std::size_t offset = line_start;
    line_start = line_end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::map<std::string, std::string> fields;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos >= line.size()) break;
      const std::size_t start = pos;
      while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      const std::string_view field = line.substr(start, pos - start);
      const std::size_t eq = field.find('=');
      if (eq == std::string_view::npos || eq == 0 || eq + 1 == field.size()) {
        throw ParseError("expected key=value, got '" + std::string(field) + "'", offset + start);
      }
      const std::string key(field.substr(0, eq));
      if (key != "over" && key != "in" && key != "out" && key != "sign") {
        throw ParseError("unknown crossing field '" + key + "'", offset + start);
      }
      if (!fields.emplace(key, std::string(field.substr(eq + 1))).second) {
        throw ParseError("duplicate crossing field '" + key + "'", offset + start);
      }
    }
    if (fields.empty()) continue;
    for (const char* key : {"over", "in", "out", "sign"}) {
      if (!fields.contains(key)) throw ParseError(std::string("crossing lacks '") + key + "='", offset);
    }
    Crossing c{fields["over"], fields["in"], fields["out"], 0};
    if (fields["sign"] == "+") {
      c.sign = 1;
    } else if (fields["sign"] == "-") {
      c.sign = -1;
    } else {
      throw ParseError("sign must be '+' or '-'", offset);
    }
    out.crossings.push_back(std::move(c));
  }
  return out;
}

QuandlePresentation crossing_presentation(const CrossingList& c) {
  if (c.crossings.empty()) return QuandlePresentation(GeneratorSet({"a"}), {});

  std::vector<std::string> arcs;
  std::map<std::string, std::size_t> index;
  auto intern = [&](const std::string& name) {
    auto [it, inserted] = index.emplace(name, arcs.size());
    if (inserted) arcs.push_back(name);
    return it->second;
  };
  struct Wiring {
    std::size_t over, in, out;
    int sign;
  };
  std::vector<Wiring> wiring;
  for (const Crossing& x : c.crossings) {
    if (x.sign != 1 && x.sign != -1) throw MalformedInput("crossing sign must be +1 or -1");
    const std::size_t over = intern(x.over);
    const std::size_t in = intern(x.under_in);
    const std::size_t out = intern(x.under_out);
    wiring.push_back({over, in, out, x.sign});
  }

  constexpr auto kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> next(arcs.size(), kNone);  // arc -> arc it continues into
  std::vector<std::size_t> ends(arcs.size(), 0);
  for (const Wiring& w : wiring) {
    if (next[w.in] != kNone) throw MalformedInput("arc '" + arcs[w.in] + "' ends at more than one crossing");
    next[w.in] = w.out;
    if (++ends[w.out] > 1) throw MalformedInput("arc '" + arcs[w.out] + "' starts at more than one crossing");
  }
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    if (next[a] == kNone || ends[a] != 1) {
      throw MalformedInput("arc '" + arcs[a] + "' is not wired into the under-strand at both ends");
    }
  }
  std::size_t length = 0;
  std::size_t a = 0;
  do {
    a = next[a];
    ++length;
  } while (a != 0 && length <= arcs.size());
  if (length != arcs.size()) {
    throw MalformedInput("crossing list describes more than one component");
  }

  std::vector<Relation> relations;
  for (const Wiring& w : wiring) {
    auto in = QuandleTerm::leaf(w.in);
    auto over = QuandleTerm::leaf(w.over);
    relations.push_back({QuandleTerm::leaf(w.out), w.sign > 0 ? QuandleTerm::star(in, over)
                                                              : QuandleTerm::star_inv(in, over)});
  }
  GeneratorSet gens;
  try {
    gens = GeneratorSet(std::move(arcs));
  } catch (const MalformedInput& e) {
    throw MalformedInput(std::string("bad arc name: ") + e.what());
  }
  return QuandlePresentation(std::move(gens), std::move(relations));
}

QuandlePresentation diagram_presentation(const Diagram& d) {
  return std::visit(
      [](const auto& v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, BraidWord>) {
          return braid_presentation(v);
        } else {
          return crossing_presentation(v);
        }
      },
      d);
}

ColoringCount coloring_invariant(const Diagram& d, const FiniteQuandle& f, unsigned threads) {
  return coloring_count(diagram_presentation(d), f, threads);
}

Distinction distinguish(const Diagram& a, const Diagram& b, std::span<const FiniteQuandle> library,
                        unsigned threads) {
  const QuandlePresentation pa = diagram_presentation(a);
  const QuandlePresentation pb = diagram_presentation(b);
  Distinction out;
  for (std::size_t i = 0; i < library.size(); ++i) {
    const std::size_t ca = coloring_count(pa, library[i], threads).count;
    const std::size_t cb = coloring_count(pb, library[i], threads).count;
    out.counts.emplace_back(ca, cb);
    if (ca != cb) {
      out.index = i;
      break;
    }
  }
  return out;
}

}  // namespace quandle
