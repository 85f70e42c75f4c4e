#pragma once

#include <span>

#include "xjoin/automorphism.hpp"

namespace xjoin::detail {

enum class Execution { Serial, Parallel };

/// Colour-preserving automorphism group by stabiliser-chain backtracking.
/// An empty `colors` span means every vertex has the same colour.
AutResult search_automorphisms(const Graph& g, std::span<const Color> colors,
                               SearchLimits limits, Execution execution);

}  // namespace xjoin::detail
