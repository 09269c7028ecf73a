#include "quandle/table_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "quandle/error.hpp"

namespace quandle {

namespace {

struct Tokenizer {
  std::string_view text;
  std::size_t pos = 0;

  std::pair<std::string_view, std::size_t> next() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    return {text.substr(start, pos - start), start};
  }

  std::size_t number() {
    auto [tok, at] = next();
    if (tok.empty()) throw ParseError("unexpected end of table", at);
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) {
      throw ParseError("expected a non-negative integer, got '" + std::string(tok) + "'", at);
    }
    return v;
  }
};

}  // namespace

Table parse_table(std::string_view text, std::string_view keyword) {
  Tokenizer in{text};
  auto [head, at] = in.next();
  if (head != keyword) throw ParseError("expected '" + std::string(keyword) + "' header", at);
  const std::size_t n = in.number();
  if (n == 0) throw ParseError("table order must be positive", at);
  if (n > 4096) throw ParseError("table order too large", at);

  // Rows must sit on their own lines.
  const std::size_t body_start = text.find('\n', in.pos);
  if (body_start == std::string_view::npos) throw ParseError("missing table rows", in.pos);
  std::string_view header_rest = text.substr(in.pos, body_start - in.pos);
  if (header_rest.find_first_not_of(" \t\r") != std::string_view::npos) {
    throw ParseError("unexpected text after header", in.pos);
  }

  Table t;
  std::size_t line_start = body_start + 1;
  while (line_start <= text.size() && t.size() <= n) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    Tokenizer row{line};
    std::vector<Element> entries;
    while (true) {
      auto [tok, col] = row.next();
      if (tok.empty()) break;
      Tokenizer one{tok};
      std::size_t v = 0;
      try {
        v = one.number();
      } catch (const ParseError& e) {
        throw ParseError(e.message(), line_start + col);
      }
      if (v >= n) throw ParseError("entry " + std::to_string(v) + " out of range", line_start + col);
      entries.push_back(static_cast<Element>(v));
    }
    if (!entries.empty()) {
      if (entries.size() != n) {
        throw ParseError("row " + std::to_string(t.size()) + " has " + std::to_string(entries.size()) +
                             " entries, expected " + std::to_string(n),
                         line_start);
      }
      if (t.size() == n) throw ParseError("too many rows", line_start);
      t.push_back(std::move(entries));
    }
    line_start = line_end + 1;
  }
  if (t.size() != n) {
    throw ParseError("expected " + std::to_string(n) + " rows, found " + std::to_string(t.size()),
                     text.size());
  }
  return t;
}

FiniteGroup parse_group(std::string_view text) { return FiniteGroup::verify(parse_table(text, "group")); }

FiniteQuandle parse_quandle(std::string_view text) {
  return FiniteQuandle::verify(parse_table(text, "quandle"));
}

std::string format_table(const Table& table, std::string_view keyword) {
  std::string out = std::string(keyword) + " " + std::to_string(table.size()) + "\n";
  for (const auto& row : table) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(row[j]);
    }
    out += '\n';
  }
  return out;
}

std::string format_quandle(const FiniteQuandle& q) { return format_table(q.table(), "quandle"); }
std::string format_group(const FiniteGroup& g) { return format_table(g.table(), "group"); }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << contents;
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace quandle
