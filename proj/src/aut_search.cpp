#include "aut_search.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <tuple>

#include "xjoin/errors.hpp"

namespace xjoin::detail {
namespace {

using Mask = std::uint64_t;

class StabilizerSearch {
 public:
  StabilizerSearch(const Graph& g, std::span<const Color> colors) : n_(g.order()), adj_(n_, 0) {
    for (const auto& [u, v] : g.edges()) {
      adj_[u] |= Mask{1} << v;
      adj_[v] |= Mask{1} << u;
    }
    assign_cells(g, colors);
    choose_base();
  }

  std::size_t order() const { return n_; }
  std::span<const Vertex> base() const { return base_; }

  /// Candidate images for base point `level` once the earlier base points
  /// are fixed: same cell, not already fixed.
  std::vector<Vertex> candidates(std::size_t level) const {
    const Vertex v = base_[level];
    std::vector<Vertex> out;
    for (Vertex w : cells_[cell_[v]]) {
      if (w != v && !fixed_before(level, w)) out.push_back(w);
    }
    return out;
  }

  /// An automorphism fixing base[0..level-1] pointwise and sending
  /// base[level] to `target`, or nothing if none exists.
  std::optional<Permutation> find_witness(std::size_t level, Vertex target) const {
    std::vector<Vertex> image(n_, 0);
    Mask used = 0;
    for (std::size_t j = 0; j < level; ++j) {
      image[base_[j]] = base_[j];
      used |= Mask{1} << base_[j];
    }
    if (!consistent(level, base_[level], target, image)) return std::nullopt;
    image[base_[level]] = target;
    used |= Mask{1} << target;
    if (!extend(level + 1, image, used)) return std::nullopt;
    return Permutation(std::move(image));
  }

 private:
  bool fixed_before(std::size_t level, Vertex w) const {
    return std::find(base_.begin(), base_.begin() + static_cast<std::ptrdiff_t>(level), w) !=
           base_.begin() + static_cast<std::ptrdiff_t>(level);
  }

  // Mapping base[k] -> u agrees on adjacency with every already-mapped
  // base point.
  bool consistent(std::size_t k, Vertex u, const std::vector<Vertex>& image) const {
    const Vertex v = base_[k];
    return consistent(k, v, u, image);
  }

  bool consistent(std::size_t k, Vertex v, Vertex u, const std::vector<Vertex>& image) const {
    if (cell_[v] != cell_[u]) return false;
    for (std::size_t j = 0; j < k; ++j) {
      const Vertex a = base_[j];
      const bool before = (adj_[v] >> a) & 1u;
      const bool after = (adj_[u] >> image[a]) & 1u;
      if (before != after) return false;
    }
    return true;
  }

  bool extend(std::size_t k, std::vector<Vertex>& image, Mask used) const {
    if (k == n_) return true;
    const Vertex v = base_[k];
    for (Vertex u : cells_[cell_[v]]) {
      if ((used >> u) & 1u) continue;
      if (!consistent(k, u, image)) continue;
      image[v] = u;
      if (extend(k + 1, image, used | (Mask{1} << u))) return true;
    }
    return false;
  }

  void assign_cells(const Graph& g, std::span<const Color> colors) {
    using Key = std::tuple<Color, std::size_t, std::vector<std::size_t>>;
    std::map<Key, std::uint32_t> ids;
    std::vector<Key> keys;
    for (Vertex v = 0; v < n_; ++v) {
      std::vector<std::size_t> nbr_degrees;
      for (Vertex u : g.neighbors(v)) nbr_degrees.push_back(g.degree(u));
      std::sort(nbr_degrees.begin(), nbr_degrees.end());
      keys.emplace_back(colors.empty() ? Color{0} : colors[v], g.degree(v), std::move(nbr_degrees));
      ids.try_emplace(keys.back(), 0);
    }
    std::uint32_t next = 0;
    for (auto& [key, id] : ids) id = next++;
    cell_.resize(n_);
    cells_.assign(ids.size(), {});
    for (Vertex v = 0; v < n_; ++v) {
      cell_[v] = ids.at(keys[v]);
      cells_[cell_[v]].push_back(v);
    }
  }

  // Greedy base: next point has the most neighbours among points already
  // chosen, then the smallest cell, then the smallest index. Early
  // adjacency constraints prune the extension search.
  void choose_base() {
    Mask chosen = 0;
    for (std::size_t k = 0; k < n_; ++k) {
      Vertex best = 0;
      std::tuple<int, std::size_t, Vertex> best_key{1, 0, 0};
      bool have = false;
      for (Vertex v = 0; v < n_; ++v) {
        if ((chosen >> v) & 1u) continue;
        const int links = std::popcount(adj_[v] & chosen);
        std::tuple<int, std::size_t, Vertex> key{-links, cells_[cell_[v]].size(), v};
        if (!have || key < best_key) {
          best_key = key;
          best = v;
          have = true;
        }
      }
      base_.push_back(best);
      chosen |= Mask{1} << best;
    }
  }

  std::size_t n_;
  std::vector<Mask> adj_;
  std::vector<std::uint32_t> cell_;
  std::vector<std::vector<Vertex>> cells_;
  std::vector<Vertex> base_;
};

std::vector<char> orbit_of(Vertex point, std::span<const Permutation> generators, std::size_t n) {
  std::vector<char> in_orbit(n, 0);
  std::vector<Vertex> stack{point};
  in_orbit[point] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const auto& g : generators) {
      const Vertex w = g(v);
      if (!in_orbit[w]) {
        in_orbit[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return in_orbit;
}

}  // namespace

AutResult search_automorphisms(const Graph& g, std::span<const Color> colors,
                               SearchLimits limits, Execution execution) {
  const std::size_t n = g.order();
  const std::size_t limit = std::min(limits.max_vertices, kSearchHardLimit);
  if (n > limit) throw SizeLimitError("automorphism search", n, limit);
  if (!colors.empty() && colors.size() != n) {
    throw std::invalid_argument("colour list length " + std::to_string(colors.size()) +
                                " does not match graph order " + std::to_string(n));
  }

  AutResult result{1, {}};
  if (n == 0) return result;
  const StabilizerSearch search(g, colors);
  const auto base = search.base();

  // Deepest level first, so that the generators collected so far always
  // generate the pointwise stabiliser of the current prefix.
  for (std::size_t level = n; level-- > 0;) {
    const Vertex point = base[level];
    auto in_orbit = orbit_of(point, result.generators, n);

    std::vector<Vertex> open;
    for (Vertex w : search.candidates(level)) {
      if (!in_orbit[w]) open.push_back(w);
    }

    std::vector<std::optional<Permutation>> witnesses(open.size());
    if (execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
      for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(open.size()); ++i) {
        witnesses[i] = search.find_witness(level, open[i]);
      }
    }

    for (std::size_t i = 0; i < open.size(); ++i) {
      if (in_orbit[open[i]]) continue;
      if (execution == Execution::Serial) witnesses[i] = search.find_witness(level, open[i]);
      if (!witnesses[i]) continue;
      result.generators.push_back(std::move(*witnesses[i]));
      in_orbit = orbit_of(point, result.generators, n);
    }
    result.order *= static_cast<unsigned>(std::count(in_orbit.begin(), in_orbit.end(), 1));
  }
  std::sort(result.generators.begin(), result.generators.end());
  return result;
}

}  // namespace xjoin::detail
