#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "xjoin/graph.hpp"

namespace xjoin {

/// Shape of a fiber graph. A one-vertex fiber is both complete and empty
/// (K_1 is Phi_1), so it gets its own tag.
enum class FiberKind { Clique, Independent, Singleton };

std::string_view to_string(FiberKind kind);

inline bool is_complete_type(FiberKind k) { return k != FiberKind::Independent; }
inline bool is_empty_type(FiberKind k) { return k != FiberKind::Clique; }

struct Fiber {
  std::size_t size = 1;
  FiberKind kind = FiberKind::Singleton;

  friend bool operator==(const Fiber&, const Fiber&) = default;
};

using Color = std::uint32_t;

/// Dense colour ids, assigned by first appearance, such that two fibers share
/// a colour iff their graphs are isomorphic (same size and kind).
std::vector<Color> fiber_colors(std::span<const Fiber> fibers);

struct TwinClass {
  VertexSet vertices;
  FiberKind kind = FiberKind::Singleton;
};

/// Partition of the host's vertices into maximal complete-or-empty externally
/// related classes, sorted by smallest member.
struct TwinPartition {
  std::vector<TwinClass> classes;
  Graph host;
};

/// The quotient of a host graph by its twin partition, with per-class fiber
/// descriptors. Quotient vertex b stands for partition.classes[b].
struct CharacteristicGraph {
  Graph quotient;
  std::vector<Fiber> fibers;
  std::vector<Vertex> class_of;
  std::vector<Color> colors;
  TwinPartition partition;

  const VertexSet& members(Vertex b) const { return partition.classes.at(b).vertices; }
};

/// Clique classes are the true-twin classes (equal closed neighbourhoods) of
/// size >= 2, Independent classes the false-twin classes (equal open
/// neighbourhoods) of size >= 2, everything else is a Singleton.
TwinPartition twin_classes(const Graph& g);

/// Throws InvariantError if some pair of classes is neither completely joined
/// nor completely non-adjacent.
CharacteristicGraph quotient(const Graph& g, const TwinPartition& p);

/// Reduced-join test over a base graph and its fibers: no two base vertices
/// with equal punctured neighbourhoods may both be empty-type across a
/// non-edge or both complete-type across an edge.
bool is_reduced(const Graph& base, std::span<const Fiber> fibers);
bool is_reduced(const CharacteristicGraph& c);

/// quotient(g, twin_classes(g)); the result is checked to be reduced.
CharacteristicGraph decompose(const Graph& g);

inline constexpr std::size_t kCemOracleMaxOrder = 12;

/// Brute-force maximal CE_m sets: subsets U with a common neighbour, inducing
/// a complete or empty graph, whose members are pairwise twins. For complete
/// and edgeless hosts the whole vertex set is returned instead. Sorted by
/// smallest member. Throws SizeLimitError above kCemOracleMaxOrder.
std::vector<VertexSet> cem_oracle(const Graph& g);

}  // namespace xjoin
