#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "xjoin/decomposition.hpp"
#include "xjoin/graph.hpp"

namespace xjoin {

/// One fiber per base vertex. Each entry has size >= 1, and kind Singleton
/// exactly when size == 1.
using FiberSpec = std::vector<Fiber>;

/// Throws std::invalid_argument when an entry breaks the FiberSpec rules.
void validate_fiber_spec(const FiberSpec& spec);

/// Whitespace-separated tokens "c<k>" (clique) and "i<k>" (independent);
/// "c1" and "i1" both mean a singleton. Throws std::invalid_argument.
FiberSpec parse_fiber_spec(std::string_view text);
std::string format_fiber_spec(const FiberSpec& spec);

struct JoinResult {
  Graph graph;
  /// Base vertex of each output vertex.
  std::vector<Vertex> class_map;
};

/// Replaces base vertex x by a block of spec[x].size consecutive vertices
/// (blocks in base order), complete for Clique fibers and edgeless otherwise,
/// and joins two blocks completely iff their base vertices are adjacent.
JoinResult x_join(const Graph& base, const FiberSpec& spec);

/// Lexicographic product: (x1, y1) ~ (x2, y2) iff x1 ~ x2, or x1 == x2 and
/// y1 ~ y2. Vertex (x, y) is numbered x * |V(inner)| + y.
Graph lex_product(const Graph& outer, const Graph& inner);

/// Whether x_join(base, spec) is a reduced join over `base`.
bool join_is_reduced(const Graph& base, const FiberSpec& spec);

}  // namespace xjoin
