#include "quandle/hom_search.hpp"

#include <algorithm>
#include <thread>

namespace quandle {

namespace {

class HomSearch {
 public:
  HomSearch(const QuandlePresentation& p, const FiniteQuandle& f)
      : p_(p), f_(f), by_level_(p.rank()), images_(p.rank(), 0) {
    for (const Relation& r : p.relations()) {
      const std::size_t bound = std::max(r.lhs.generator_bound(), r.rhs.generator_bound());
      by_level_[bound - 1].push_back(&r);
    }
  }

  /// Runs the search with the first generator restricted to `first_values`.
  void run(std::span<const Element> first_values,
           const std::function<bool(std::span<const Element>)>& visit) {
    visit_ = &visit;
    stopped_ = false;
    for (Element v : first_values) {
      if (stopped_) break;
      images_[0] = v;
      if (level_ok(0)) descend(1);
    }
  }

 private:
  bool level_ok(std::size_t level) const {
    for (const Relation* r : by_level_[level]) {
      if (eval_term(r->lhs, f_, images_) != eval_term(r->rhs, f_, images_)) return false;
    }
    return true;
  }

  void descend(std::size_t level) {
    if (level == images_.size()) {
      if (!(*visit_)(images_)) stopped_ = true;
      return;
    }
    for (Element v = 0; v < f_.order() && !stopped_; ++v) {
      images_[level] = v;
      if (level_ok(level)) descend(level + 1);
    }
  }

  const QuandlePresentation& p_;
  const FiniteQuandle& f_;
  std::vector<std::vector<const Relation*>> by_level_;
  std::vector<Element> images_;
  const std::function<bool(std::span<const Element>)>* visit_ = nullptr;
  bool stopped_ = false;
};

std::vector<Element> all_elements(std::size_t n) {
  std::vector<Element> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Element>(i);
  return out;
}

}  // namespace

bool satisfies_relations(const QuandlePresentation& p, const FiniteQuandle& f,
                         std::span<const Element> images) {
  for (const Relation& r : p.relations()) {
    if (eval_term(r.lhs, f, images) != eval_term(r.rhs, f, images)) return false;
  }
  return true;
}

void for_each_hom(const QuandlePresentation& p, const FiniteQuandle& f,
                  const std::function<bool(std::span<const Element>)>& visit) {
  const auto firsts = all_elements(f.order());
  HomSearch(p, f).run(firsts, visit);
}

std::vector<Assignment> hom_enumerate(const QuandlePresentation& p, const FiniteQuandle& f,
                                      unsigned threads) {
  const std::size_t n = f.order();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(n));

  // One bucket per image of the first generator; concatenating the buckets in
  // order reproduces the serial lexicographic order.
  std::vector<std::vector<Assignment>> buckets(n);
  auto worker = [&](unsigned id) {
    HomSearch search(p, f);
    for (Element v = id; v < n; v += threads) {
      const Element first[] = {v};
      search.run(first, [&](std::span<const Element> images) {
        buckets[v].emplace_back(images.begin(), images.end());
        return true;
      });
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }

  std::vector<Assignment> out;
  for (auto& b : buckets) {
    out.insert(out.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
  }
  return out;
}

ColoringCount coloring_count(const QuandlePresentation& p, const FiniteQuandle& f,
                             unsigned threads) {
  ColoringCount out;
  for (const Assignment& a : hom_enumerate(p, f, threads)) {
    ++out.count;
    if (std::adjacent_find(a.begin(), a.end(), std::not_equal_to<>()) != a.end()) out.non_constant = true;
  }
  return out;
}

}  // namespace quandle
