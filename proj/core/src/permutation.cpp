#include "quandle/permutation.hpp"

#include <numeric>

#include "quandle/error.hpp"

namespace quandle {

Permutation::Permutation(std::vector<Element> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (Element v : images_) {
    if (v >= images_.size() || hit[v]) {
      throw MalformedInput("permutation images are not a bijection");
    }
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Element> images(degree);
  std::iota(images.begin(), images.end(), Element{0});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(std::size_t degree, Element a, Element b) {
  if (a >= degree || b >= degree) throw MalformedInput("transposition point out of range");
  Permutation p = identity(degree);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.degree() != degree()) throw MalformedInput("permutation degree mismatch");
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = next.images_[images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Element>(i);
  return out;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  return g.inverse().then(*this).then(g);
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    std::size_t p = start;
    bool first = true;
    while (!seen[p]) {
      seen[p] = true;
      if (!first) out += ' ';
      out += std::to_string(p);
      first = false;
      p = images_[p];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace quandle

std::size_t std::hash<quandle::Permutation>::operator()(
    const quandle::Permutation& p) const noexcept {
  std::size_t h = p.degree();
  for (auto v : p.images()) h = h * 1000003u ^ v;
  return h;
}
