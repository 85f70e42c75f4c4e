#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "xjoin/graph.hpp"
#include "xjoin/permutation.hpp"

namespace xjoin {

/// Label-preserving isomorphism from `a` to `b` (labels[a][v] ==
/// labels[b][phi(v)]), by plain backtracking. Meant for the small quotient
/// graphs compared in round-trip checks, not as a general service.
std::optional<Permutation> find_isomorphism(const Graph& a, std::span<const std::uint64_t> labels_a,
                                            const Graph& b, std::span<const std::uint64_t> labels_b);

}  // namespace xjoin
