#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quandle/finite_quandle.hpp"
#include "quandle/free_group.hpp"
#include "quandle/free_quandle.hpp"

namespace quandle {

enum class Op : std::uint8_t {
  Star,     // x * y
  StarInv,  // x *^{-1} y, written x / y
};

/// Immutable binary term over generator indices. Subterms are shared, so
/// copies are cheap; equality is structural.
class QuandleTerm {
 public:
  static QuandleTerm leaf(std::size_t gen);
  static QuandleTerm node(Op op, QuandleTerm left, QuandleTerm right);
  static QuandleTerm star(QuandleTerm l, QuandleTerm r) { return node(Op::Star, std::move(l), std::move(r)); }
  static QuandleTerm star_inv(QuandleTerm l, QuandleTerm r) {
    return node(Op::StarInv, std::move(l), std::move(r));
  }

  bool is_leaf() const noexcept { return node_->is_leaf; }
  std::size_t gen() const noexcept { return node_->gen; }
  Op op() const noexcept { return node_->op; }
  const QuandleTerm& left() const noexcept { return node_->children[0]; }
  const QuandleTerm& right() const noexcept { return node_->children[1]; }
  const QuandleTerm& child(std::size_t i) const noexcept { return node_->children[i]; }

  /// Number of nodes (leaves included).
  std::size_t size() const noexcept { return node_->size; }
  std::size_t hash() const noexcept { return node_->hash; }
  /// Largest generator index + 1.
  std::size_t generator_bound() const noexcept { return node_->generator_bound; }

  friend bool operator==(const QuandleTerm& a, const QuandleTerm& b) noexcept;

 private:
  struct Node {
    bool is_leaf = true;
    std::size_t gen = 0;
    Op op = Op::Star;
    std::vector<QuandleTerm> children;
    std::size_t size = 1;
    std::size_t hash = 0;
    std::size_t generator_bound = 0;
  };

  explicit QuandleTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct QuandleTermHash {
  std::size_t operator()(const QuandleTerm& t) const noexcept { return t.hash(); }
};

/// Path from the root: 0 = left child, 1 = right child.
using TermPosition = std::vector<std::uint8_t>;

const QuandleTerm& subterm_at(const QuandleTerm& t, std::span<const std::uint8_t> pos);
QuandleTerm replace_at(const QuandleTerm& t, std::span<const std::uint8_t> pos,
                       const QuandleTerm& replacement);

/// term := name | "(" term op term ")", op := "*" | "/". Fully
/// parenthesized; throws ParseError with the offending offset.
QuandleTerm parse_term(std::string_view text, const GeneratorSet& gens);
std::string format_term(const QuandleTerm& t, const GeneratorSet& gens);

/// Images of the generators in a target quandle.
using Assignment = std::vector<Element>;

Element eval_term(const QuandleTerm& t, const FiniteQuandle& f, std::span<const Element> images);

/// Value of a term in the free quandle on the presentation's generators.
FreeQuandleElement eval_free(const QuandleTerm& t);

/// Image of a term in the enveloping group: x*y -> y^{-1} x y, x/y -> y x y^{-1}.
GroupWord to_group_word(const QuandleTerm& t);

}  // namespace quandle
