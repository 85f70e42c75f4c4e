#include "xjoin/isomorphism.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace xjoin {
namespace {

struct Matcher {
  const Graph& a;
  const Graph& b;
  std::span<const std::uint64_t> la;
  std::span<const std::uint64_t> lb;
  std::vector<Vertex> image;
  std::vector<char> used;

  bool compatible(Vertex v, Vertex w) const {
    if (la[v] != lb[w] || a.degree(v) != b.degree(w)) return false;
    for (Vertex u = 0; u < v; ++u) {
      if (a.adjacent(v, u) != b.adjacent(w, image[u])) return false;
    }
    return true;
  }

  bool extend(Vertex v) {
    if (v == a.order()) return true;
    for (Vertex w = 0; w < b.order(); ++w) {
      if (used[w] || !compatible(v, w)) continue;
      image[v] = w;
      used[w] = 1;
      if (extend(v + 1)) return true;
      used[w] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<Permutation> find_isomorphism(const Graph& a, std::span<const std::uint64_t> labels_a,
                                            const Graph& b, std::span<const std::uint64_t> labels_b) {
  if (labels_a.size() != a.order() || labels_b.size() != b.order()) {
    throw std::invalid_argument("one label per vertex required");
  }
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return std::nullopt;
  std::vector<std::uint64_t> sa(labels_a.begin(), labels_a.end());
  std::vector<std::uint64_t> sb(labels_b.begin(), labels_b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;

  Matcher m{a, b, labels_a, labels_b, std::vector<Vertex>(a.order(), 0),
            std::vector<char>(b.order(), 0)};
  if (!m.extend(0)) return std::nullopt;
  return Permutation(std::move(m.image));
}

}  // namespace xjoin
