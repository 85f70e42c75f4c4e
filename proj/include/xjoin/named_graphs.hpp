#pragma once

#include <cstddef>

#include "xjoin/graph.hpp"

// Small named families used by fixtures, tests and the benchmark.
namespace xjoin::named {

Graph complete(std::size_t n);
Graph edgeless(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
/// Parts are {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(std::size_t a, std::size_t b);
/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
Graph petersen();

}  // namespace xjoin::named
