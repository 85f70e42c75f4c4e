#include "xjoin/decomposition.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>

#include "xjoin/errors.hpp"

namespace xjoin {

std::string_view to_string(FiberKind kind) {
  switch (kind) {
    case FiberKind::Clique:
      return "clique";
    case FiberKind::Independent:
      return "independent";
    case FiberKind::Singleton:
      return "singleton";
  }
  return "?";
}

std::vector<Color> fiber_colors(std::span<const Fiber> fibers) {
  std::map<std::pair<std::size_t, FiberKind>, Color> ids;
  std::vector<Color> colors;
  colors.reserve(fibers.size());
  for (const auto& f : fibers) {
    // Size one always means the single-vertex graph, whatever the tag says.
    const auto key = std::make_pair(f.size, f.size == 1 ? FiberKind::Singleton : f.kind);
    auto [it, inserted] = ids.try_emplace(key, static_cast<Color>(ids.size()));
    colors.push_back(it->second);
  }
  return colors;
}

TwinPartition twin_classes(const Graph& g) {
  const std::size_t n = g.order();
  std::map<std::vector<Vertex>, std::vector<Vertex>> by_open;
  std::map<std::vector<Vertex>, std::vector<Vertex>> by_closed;
  for (Vertex v = 0; v < n; ++v) {
    auto open = open_neighborhood(g, v);
    by_open[std::vector<Vertex>(open.begin(), open.end())].push_back(v);
    auto closed = closed_neighborhood(g, v);
    by_closed[std::vector<Vertex>(closed.begin(), closed.end())].push_back(v);
  }

  std::vector<char> assigned(n, 0);
  TwinPartition out{{}, g};
  auto take = [&](std::map<std::vector<Vertex>, std::vector<Vertex>>& groups, FiberKind kind) {
    for (auto& [key, members] : groups) {
      if (members.size() < 2) continue;
      for (Vertex v : members) {
        // A vertex with a false twin cannot also have a true twin.
        if (assigned[v]) throw InvariantError("vertex has both a true and a false twin");
        assigned[v] = 1;
      }
      out.classes.push_back({VertexSet(std::move(members)), kind});
    }
  };
  take(by_closed, FiberKind::Clique);
  take(by_open, FiberKind::Independent);
  for (Vertex v = 0; v < n; ++v) {
    if (!assigned[v]) out.classes.push_back({VertexSet{v}, FiberKind::Singleton});
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const TwinClass& a, const TwinClass& b) { return a.vertices.front() < b.vertices.front(); });
  return out;
}

CharacteristicGraph quotient(const Graph& g, const TwinPartition& p) {
  const std::size_t n = g.order();
  const std::size_t k = p.classes.size();
  CharacteristicGraph c;
  c.class_of.assign(n, 0);
  std::vector<char> seen(n, 0);
  for (Vertex b = 0; b < k; ++b) {
    const auto& cls = p.classes[b];
    for (Vertex v : cls.vertices) {
      if (v >= n || seen[v]) throw InvariantError("twin partition is not a partition of the host");
      seen[v] = 1;
      c.class_of[v] = b;
    }
    c.fibers.push_back({cls.vertices.size(), cls.kind});
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw InvariantError("twin partition does not cover the host");
  }

  // Count cross edges per class pair; all-or-nothing means the count is 0 or
  // the product of the class sizes.
  std::map<std::pair<Vertex, Vertex>, std::size_t> cross;
  for (const auto& [u, v] : g.edges()) {
    Vertex a = c.class_of[u];
    Vertex b = c.class_of[v];
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    ++cross[{a, b}];
  }
  std::vector<Edge> quotient_edges;
  for (const auto& [pair, count] : cross) {
    if (count != c.fibers[pair.first].size * c.fibers[pair.second].size) {
      throw InvariantError("classes " + std::to_string(pair.first) + " and " +
                           std::to_string(pair.second) + " are partially joined");
    }
    quotient_edges.push_back(pair);
  }
  c.quotient = Graph(k, quotient_edges);
  c.colors = fiber_colors(c.fibers);
  c.partition = p;
  return c;
}

bool is_reduced(const Graph& base, std::span<const Fiber> fibers) {
  const std::size_t k = base.order();
  if (fibers.size() != k) throw std::invalid_argument("one fiber per base vertex required");
  for (Vertex x = 0; x < k; ++x) {
    for (Vertex y = x + 1; y < k; ++y) {
      if (!pair_externally_related(base, x, y)) continue;
      const FiberKind fx = fibers[x].kind;
      const FiberKind fy = fibers[y].kind;
      if (base.adjacent(x, y)) {
        if (is_complete_type(fx) && is_complete_type(fy)) return false;
      } else {
        if (is_empty_type(fx) && is_empty_type(fy)) return false;
      }
    }
  }
  return true;
}

bool is_reduced(const CharacteristicGraph& c) { return is_reduced(c.quotient, c.fibers); }

CharacteristicGraph decompose(const Graph& g) {
  auto c = quotient(g, twin_classes(g));
  if (!is_reduced(c)) throw InvariantError("twin-class quotient is not reduced");
  return c;
}

std::vector<VertexSet> cem_oracle(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kCemOracleMaxOrder) {
    throw SizeLimitError("cem_oracle enumerates all vertex subsets", n, kCemOracleMaxOrder);
  }
  if (n == 0) return {};

  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  const std::uint32_t all = (1u << n) - 1;

  auto subset_to_set = [&](std::uint32_t mask) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1u) members.push_back(v);
    }
    return VertexSet(std::move(members));
  };

  const std::size_t max_edges = n * (n - 1) / 2;
  if (g.edge_count() == 0 || g.edge_count() == max_edges) return {subset_to_set(all)};

  std::vector<std::uint32_t> members;
  for (std::uint32_t mask = 1; mask <= all; ++mask) {
    // NN: common neighbourhood of U is nonempty.
    std::uint32_t common = all;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1u) common &= adj[v];
    }
    if (common == 0) continue;

    bool complete = true;
    bool empty = true;
    bool twins = true;
    for (Vertex x = 0; x < n && twins; ++x) {
      if (!(mask >> x & 1u)) continue;
      for (Vertex y = x + 1; y < n; ++y) {
        if (!(mask >> y & 1u)) continue;
        const bool edge = adj[x] >> y & 1u;
        complete = complete && edge;
        empty = empty && !edge;
        const std::uint32_t punctured = ~((1u << x) | (1u << y));
        if ((adj[x] & punctured) != (adj[y] & punctured)) {
          twins = false;
          break;
        }
      }
    }
    if (twins && (complete || empty)) members.push_back(mask);
  }

  std::vector<VertexSet> maximal;
  for (std::uint32_t m : members) {
    const bool dominated = std::any_of(members.begin(), members.end(), [m](std::uint32_t o) {
      return o != m && (o & m) == m;
    });
    if (!dominated) maximal.push_back(subset_to_set(m));
  }
  std::sort(maximal.begin(), maximal.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  return maximal;
}

}  // namespace xjoin
