#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "xjoin/graph.hpp"

namespace xjoin {

/// Largest order the 4-byte graph6 size header can carry.
inline constexpr std::size_t kGraph6MaxOrder = 258047;

enum class InputFormat { Graph6, EdgeList };

/// Line-oriented edge list:
///
///   # comment
///   n 4
///   0 1
///   1 2
///
/// '#' starts a comment anywhere on a line. Duplicate edges and both
/// orientations are tolerated. Errors carry the 1-based line number.
Graph parse_edge_list(std::string_view text);

/// Single graph6 string; an optional ">>graph6<<" header and surrounding
/// whitespace are ignored.
Graph parse_graph6(std::string_view text);

/// Throws SizeLimitError when the order exceeds kGraph6MaxOrder.
std::string emit_graph6(const Graph& g);

/// Inverse of parse_edge_list; one edge per line, u < v.
std::string emit_edge_list(const Graph& g);

/// Undirected DOT. When `labels` is non-empty it supplies one node label per
/// vertex.
std::string emit_dot(const Graph& g, std::span<const std::string> labels = {});

/// graph6 iff the first non-blank byte is printable graph6 (63..126) and no
/// whitespace-separated token is an integer; otherwise edge list.
InputFormat detect_format(std::string_view text);

Graph parse_graph(std::string_view text, std::optional<InputFormat> format = {});

}  // namespace xjoin
