#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace xjoin {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Strictly increasing list of vertex indices. Construction sorts and removes
/// duplicates; membership in a particular host is checked by the operations
/// that take a host graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members);
  VertexSet(std::initializer_list<Vertex> members);

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const;

  Vertex front() const { return members_.front(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  std::span<const Vertex> view() const noexcept { return members_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Finite simple undirected graph on vertices 0..order()-1. Immutable once
/// built; every adjacency list is strictly sorted, symmetric and loop-free.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  /// Duplicate edges and both orientations are accepted. Throws
  /// std::out_of_range for an index >= n and std::invalid_argument for a loop.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

VertexSet open_neighborhood(const Graph& g, Vertex v);
VertexSet closed_neighborhood(const Graph& g, Vertex v);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);

/// True iff every member of `s` has the same neighbourhood outside `s`.
bool externally_related(const Graph& g, const VertexSet& s);

/// N(x) \ {y} == N(y) \ {x}. Throws std::invalid_argument when x == y.
bool pair_externally_related(const Graph& g, Vertex x, Vertex y);

/// Subgraph induced by `s`, relabelled to 0..|s|-1 in ascending order.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);

}  // namespace xjoin
