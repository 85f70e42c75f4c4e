#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "xjoin/decomposition.hpp"
#include "xjoin/graph.hpp"
#include "xjoin/permutation.hpp"

namespace xjoin {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(std::size_t n);

/// Bound on the number of vertices the exhaustive searches accept. The
/// engine itself works on 64-bit adjacency rows, so 64 is the hard ceiling.
struct SearchLimits {
  std::size_t max_vertices = 12;
};

inline constexpr std::size_t kSearchHardLimit = 64;

struct AutResult {
  BigInt order;
  /// Sorted lexicographically by image array; deterministic for a given input.
  std::vector<Permutation> generators;
};

/// Throws std::invalid_argument when the degrees differ.
bool verify_automorphism(const Graph& g, const Permutation& p);

/// Exhaustive backtracking over consistent partial vertex maps, pruned by
/// (degree, sorted neighbour-degree multiset). The order is the product of
/// the orbit lengths along a stabiliser chain; every orbit point is decided by
/// an explicit search, and the witnesses found are returned as generators.
/// Candidate images at each level are searched with OpenMP.
AutResult brute_force_aut(const Graph& g, SearchLimits limits = {});
/// Single-threaded reference for brute_force_aut; identical output.
AutResult brute_force_aut_serial(const Graph& g, SearchLimits limits = {});

/// Automorphisms f of `x` with colors[f(v)] == colors[v] for every v.
AutResult color_aut(const Graph& x, std::span<const Color> colors, SearchLimits limits = {});
AutResult color_aut_serial(const Graph& x, std::span<const Color> colors,
                           SearchLimits limits = {});

/// Aut of a graph described by its characteristic graph, as
/// (product of fiber symmetric groups) semidirect (colour-preserving
/// automorphisms of the quotient).
struct GroupDescription {
  std::size_t degree = 0;
  /// Adjacent transpositions inside each fiber of size >= 2.
  std::vector<Permutation> kernel_generators;
  /// Block lifts of the quotient's colour-preserving automorphism generators.
  std::vector<Permutation> complement_generators;
  BigInt order;
  BigInt kernel_order;
  BigInt quotient_group_order;
};

/// Only the quotient is searched; fiber sizes contribute factorials. Throws
/// SizeLimitError when the quotient exceeds `limits`.
GroupDescription aut_from_decomposition(const CharacteristicGraph& c, SearchLimits limits = {});

/// Lift of a quotient automorphism: the i-th smallest vertex of fiber b goes
/// to the i-th smallest vertex of fiber f(b).
Permutation lift_quotient_automorphism(const CharacteristicGraph& c, const Permutation& f);

/// Wreath-product order (s!)^|V(x)| * |Aut(x)| for the join of `x` with
/// uniform fibers. Throws NotReducedError when that join is not reduced.
BigInt wreath_order(const Graph& x, std::size_t fiber_size, FiberKind kind,
                    SearchLimits limits = {});

/// Whether p maps every class (class_of value) onto itself.
bool fixes_fibers_setwise(const Permutation& p, std::span<const Vertex> class_of);

}  // namespace xjoin
