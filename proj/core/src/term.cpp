#include "quandle/term.hpp"

#include <cctype>

#include "quandle/error.hpp"

namespace quandle {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

QuandleTerm QuandleTerm::leaf(std::size_t gen) {
  auto n = std::make_shared<Node>();
  n->is_leaf = true;
  n->gen = gen;
  n->hash = mix(0x51ed27, gen);
  n->generator_bound = gen + 1;
  return QuandleTerm(std::move(n));
}

QuandleTerm QuandleTerm::node(Op op, QuandleTerm left, QuandleTerm right) {
  auto n = std::make_shared<Node>();
  n->is_leaf = false;
  n->op = op;
  n->size = 1 + left.size() + right.size();
  n->hash = mix(mix(op == Op::Star ? 0x2a : 0x3b, left.hash()), right.hash());
  n->generator_bound = std::max(left.generator_bound(), right.generator_bound());
  n->children = {std::move(left), std::move(right)};
  return QuandleTerm(std::move(n));
}

bool operator==(const QuandleTerm& a, const QuandleTerm& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size() || a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.gen() == b.gen();
  return a.op() == b.op() && a.left() == b.left() && a.right() == b.right();
}

const QuandleTerm& subterm_at(const QuandleTerm& t, std::span<const std::uint8_t> pos) {
  const QuandleTerm* cur = &t;
  for (auto step : pos) {
    if (cur->is_leaf() || step > 1) throw MalformedInput("term position does not exist");
    cur = &cur->child(step);
  }
  return *cur;
}

QuandleTerm replace_at(const QuandleTerm& t, std::span<const std::uint8_t> pos,
                       const QuandleTerm& replacement) {
  if (pos.empty()) return replacement;
  if (t.is_leaf() || pos[0] > 1) throw MalformedInput("term position does not exist");
  if (pos[0] == 0) return QuandleTerm::node(t.op(), replace_at(t.left(), pos.subspan(1), replacement), t.right());
  return QuandleTerm::node(t.op(), t.left(), replace_at(t.right(), pos.subspan(1), replacement));
}

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, const GeneratorSet& gens) : text_(text), gens_(gens) {}

  QuandleTerm parse_all() {
    QuandleTerm t = parse();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return t;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  static bool name_char(char c) {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '*' &&
           c != '/' && c != '=';
  }

  QuandleTerm parse() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("expected a term", pos_);
    if (text_[pos_] == '(') {
      const std::size_t open = pos_;
      ++pos_;
      QuandleTerm left = parse();
      skip_space();
      if (pos_ >= text_.size()) throw ParseError("missing operator '*' or '/'", pos_);
      Op op;
      if (text_[pos_] == '*') {
        op = Op::Star;
      } else if (text_[pos_] == '/') {
        op = Op::StarInv;
      } else {
        throw ParseError("missing operator '*' or '/'", pos_);
      }
      ++pos_;
      QuandleTerm right = parse();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') {
        throw ParseError("unbalanced parenthesis opened at " + std::to_string(open), pos_);
      }
      ++pos_;
      return QuandleTerm::node(op, std::move(left), std::move(right));
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
    if (pos_ == start) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    const std::string_view name = text_.substr(start, pos_ - start);
    auto idx = gens_.index_of(name);
    if (!idx) throw ParseError("unknown generator '" + std::string(name) + "'", start);
    return QuandleTerm::leaf(*idx);
  }

  std::string_view text_;
  const GeneratorSet& gens_;
  std::size_t pos_ = 0;
};

void format_into(const QuandleTerm& t, const GeneratorSet& gens, std::string& out) {
  if (t.is_leaf()) {
    out += gens.name(t.gen());
    return;
  }
  out += '(';
  format_into(t.left(), gens, out);
  out += t.op() == Op::Star ? " * " : " / ";
  format_into(t.right(), gens, out);
  out += ')';
}

}  // namespace

QuandleTerm parse_term(std::string_view text, const GeneratorSet& gens) {
  return TermParser(text, gens).parse_all();
}

std::string format_term(const QuandleTerm& t, const GeneratorSet& gens) {
  std::string out;
  format_into(t, gens, out);
  return out;
}

Element eval_term(const QuandleTerm& t, const FiniteQuandle& f, std::span<const Element> images) {
  if (t.is_leaf()) return images[t.gen()];
  const Element l = eval_term(t.left(), f, images);
  const Element r = eval_term(t.right(), f, images);
  return t.op() == Op::Star ? f.op(l, r) : f.op_inv(l, r);
}

FreeQuandleElement eval_free(const QuandleTerm& t) {
  if (t.is_leaf()) return FreeQuandleElement::generator(t.gen());
  const auto l = eval_free(t.left());
  const auto r = eval_free(t.right());
  return t.op() == Op::Star ? rack_op(l, r) : rack_op_inv(l, r);
}

GroupWord to_group_word(const QuandleTerm& t) {
  if (t.is_leaf()) return GroupWord::generator(t.gen());
  const GroupWord l = to_group_word(t.left());
  const GroupWord r = to_group_word(t.right());
  return t.op() == Op::Star ? conjugate(l, r) : conjugate(l, invert(r));
}

}  // namespace quandle
