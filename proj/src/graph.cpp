#include "xjoin/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace xjoin {
namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range for graph of order " +
                            std::to_string(g.order()));
  }
}

void check_members(const Graph& g, const VertexSet& s) {
  if (!s.empty() && s.view().back() >= g.order()) {
    throw std::out_of_range("vertex set member " + std::to_string(s.view().back()) +
                            " out of range for graph of order " +
                            std::to_string(g.order()));
  }
}

// Sorted-range difference a \ s.
std::vector<Vertex> minus(std::span<const Vertex> a, std::span<const Vertex> s) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), s.begin(), s.end(), std::back_inserter(out));
  return out;
}

}  // namespace

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::out_of_range("edge " + std::to_string(u) + "-" + std::to_string(v) +
                              " out of range for graph of order " + std::to_string(n));
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adjacency_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet open_neighborhood(const Graph& g, Vertex v) {
  check_vertex(g, v);
  auto nb = g.neighbors(v);
  return VertexSet(std::vector<Vertex>(nb.begin(), nb.end()));
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  check_vertex(g, v);
  auto nb = g.neighbors(v);
  std::vector<Vertex> members(nb.begin(), nb.end());
  members.push_back(v);
  return VertexSet(std::move(members));
}

bool is_clique(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

bool externally_related(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  if (s.size() <= 1) return true;
  const auto reference = minus(g.neighbors(s.front()), s.view());
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (minus(g.neighbors(s[i]), s.view()) != reference) return false;
  }
  return true;
}

bool pair_externally_related(const Graph& g, Vertex x, Vertex y) {
  check_vertex(g, x);
  check_vertex(g, y);
  if (x == y) {
    throw std::invalid_argument("pair_externally_related needs two distinct vertices");
  }
  const Vertex only_y[] = {y};
  const Vertex only_x[] = {x};
  return minus(g.neighbors(x), only_y) == minus(g.neighbors(y), only_x);
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.adjacent(s[i], s[j])) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return Graph(s.size(), edges);
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

}  // namespace xjoin
