#include "quandle/free_group.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>

#include "quandle/error.hpp"

namespace quandle {

namespace {

constexpr std::string_view kReserved = "^*/()=,|<>";

bool valid_name(const std::string& name) {
  if (name.empty() || name == "1") return false;
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c)) || kReserved.find(c) != std::string_view::npos) {
      return false;
    }
  }
  return true;
}

}  // namespace

GeneratorSet::GeneratorSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_name(names_[i])) throw MalformedInput("invalid generator name '" + names_[i] + "'");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw MalformedInput("duplicate generator name '" + names_[i] + "'");
    }
  }
}

std::optional<std::size_t> GeneratorSet::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

GroupWord GroupWord::reduce(std::span<const Letter> letters, std::size_t rank) {
  for (const Letter& l : letters) {
    if (l.gen >= rank) {
      throw MalformedInput("generator index " + std::to_string(l.gen) + " out of range for rank " +
                           std::to_string(rank));
    }
  }
  return reduce(letters);
}

GroupWord GroupWord::reduce(std::span<const Letter> letters) {
  GroupWord out;
  out.letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    if (l.exp != 1 && l.exp != -1) throw MalformedInput("letter exponent must be +1 or -1");
    if (!out.letters_.empty() && out.letters_.back() == l.inverse()) {
      out.letters_.pop_back();
    } else {
      out.letters_.push_back(l);
    }
  }
  return out;
}

GroupWord GroupWord::generator(std::size_t gen, int exp) {
  const Letter l{gen, exp};
  return reduce(std::span<const Letter>(&l, 1));
}

GroupWord multiply(const GroupWord& u, const GroupWord& v) {
  std::vector<Letter> all(u.letters().begin(), u.letters().end());
  all.insert(all.end(), v.letters().begin(), v.letters().end());
  return GroupWord::reduce(all);
}

GroupWord invert(const GroupWord& u) {
  std::vector<Letter> out;
  out.reserve(u.length());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) out.push_back(it->inverse());
  return GroupWord::reduce(out);
}

GroupWord conjugate(const GroupWord& u, const GroupWord& v) {
  return multiply(multiply(invert(v), u), v);
}

GroupWord parse_word(std::string_view text, const GeneratorSet& gens) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  std::size_t tokens = 0;
  bool saw_one = false;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string_view token = text.substr(start, pos - start);
    ++tokens;
    if (token == "1") {
      saw_one = true;
      continue;
    }
    int exp = 1;
    if (token.size() > 3 && token.ends_with("^-1")) {
      exp = -1;
      token.remove_suffix(3);
    } else if (token.find('^') != std::string_view::npos) {
      throw ParseError("bad exponent in token '" + std::string(token) + "'", start);
    }
    auto idx = gens.index_of(token);
    if (!idx) throw ParseError("unknown generator '" + std::string(token) + "'", start);
    letters.push_back({*idx, exp});
  }
  if (saw_one && tokens != 1) throw ParseError("'1' must stand alone", 0);
  return GroupWord::reduce(letters, gens.size());
}

std::string format_word(const GroupWord& w, const GeneratorSet& gens) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += gens.name(l.gen);
    if (l.exp < 0) out += "^-1";
  }
  return out;
}

Permutation PermutationRep::evaluate(const GroupWord& w) const {
  Permutation acc = Permutation::identity(degree);
  for (const Letter& l : w.letters()) {
    const Permutation& p = generator_images.at(l.gen);
    acc = acc.then(l.exp > 0 ? p : p.inverse());
  }
  return acc;
}

PermutationRep permutation_rep(const GroupWord& g, std::size_t rank) {
  if (g.is_identity()) throw PreconditionError("permutation_rep requires a non-identity word");
  const std::size_t n = g.length() + 1;
  constexpr Element kUnset = static_cast<Element>(-1);
  std::vector<std::vector<Element>> partial(rank, std::vector<Element>(n, kUnset));

  auto record = [&](std::size_t gen, Element from, Element to) {
    auto& map = partial.at(gen);
    // A conflict here would mean g was not freely reduced.
    assert(map[from] == kUnset || map[from] == to);
    if (map[from] != kUnset && map[from] != to) {
      throw PreconditionError("conflicting partial map; word is not freely reduced");
    }
    map[from] = to;
  };

  for (std::size_t j = 0; j < g.length(); ++j) {
    const Letter& l = g.letters()[j];
    if (l.gen >= rank) throw MalformedInput("generator index out of range for rank");
    const auto here = static_cast<Element>(j);
    if (l.exp > 0) {
      record(l.gen, here, here + 1);
    } else {
      record(l.gen, here + 1, here);
    }
  }

  PermutationRep rep;
  rep.degree = n;
  rep.generator_images.reserve(rank);
  for (auto& map : partial) {
    std::vector<bool> hit(n, false);
    for (Element v : map) {
      if (v != kUnset) {
        assert(!hit[v]);
        hit[v] = true;
      }
    }
    std::size_t next_unhit = 0;
    for (Element& v : map) {
      if (v != kUnset) continue;
      while (hit[next_unhit]) ++next_unhit;
      v = static_cast<Element>(next_unhit);
      hit[next_unhit] = true;
    }
    rep.generator_images.emplace_back(std::move(map));
  }
  return rep;
}

std::string format_presentation(const GroupPresentation& p) {
  std::ostringstream out;
  out << "< ";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) out << ", ";
    out << p.generators.name(i);
  }
  out << " |";
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    out << (i ? ", " : " ") << format_word(p.relations[i].first, p.generators) << " = "
        << format_word(p.relations[i].second, p.generators);
  }
  out << " >";
  return out.str();
}

}  // namespace quandle
