#include "xjoin/permutation.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace xjoin {
namespace {

struct ImagesHash {
  std::size_t operator()(const std::vector<Vertex>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Vertex x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace

Permutation::Permutation(std::vector<Vertex> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (Vertex v : images_) {
    if (v >= images_.size() || hit[v]) {
      throw std::invalid_argument("image array is not a bijection");
    }
    hit[v] = 1;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Vertex> images(degree);
  std::iota(images.begin(), images.end(), Vertex{0});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(std::size_t degree, Vertex a, Vertex b) {
  if (a >= degree || b >= degree) throw std::out_of_range("transposition point out of range");
  auto p = identity(degree);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

bool Permutation::is_identity() const {
  for (Vertex v = 0; v < images_.size(); ++v) {
    if (images_[v] != v) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (Vertex v = 0; v < images_.size(); ++v) p.images_[images_[v]] = v;
  return p;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch in product");
  Permutation r;
  r.images_.resize(q.degree());
  for (Vertex v = 0; v < q.degree(); ++v) r.images_[v] = p.images_[q.images_[v]];
  return r;
}

std::string to_cycle_string(const Permutation& p) {
  std::string out;
  std::vector<char> seen(p.degree(), 0);
  for (Vertex start = 0; start < p.degree(); ++start) {
    if (seen[start] || p(start) == start) continue;
    out += '(';
    for (Vertex v = start; !seen[v]; v = p(v)) {
      seen[v] = 1;
      if (v != start) out += ' ';
      out += std::to_string(v);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::optional<std::vector<Permutation>> group_closure(std::span<const Permutation> generators,
                                                      std::size_t degree, std::size_t cap) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
  }
  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::unordered_set<std::vector<Vertex>, ImagesHash> seen;
  seen.emplace(elements[0].images().begin(), elements[0].images().end());
  for (std::size_t next = 0; next < elements.size(); ++next) {
    for (const auto& g : generators) {
      Permutation candidate = g * elements[next];
      auto images = candidate.images();
      if (seen.emplace(images.begin(), images.end()).second) {
        if (seen.size() > cap) return std::nullopt;
        elements.push_back(std::move(candidate));
      }
    }
  }
  return elements;
}

std::optional<std::size_t> group_closure_size(std::span<const Permutation> generators,
                                              std::size_t degree, std::size_t cap) {
  auto elements = group_closure(generators, degree, cap);
  if (!elements) return std::nullopt;
  return elements->size();
}

}  // namespace xjoin
