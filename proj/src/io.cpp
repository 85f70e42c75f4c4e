#include "xjoin/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include "xjoin/errors.hpp"

namespace xjoin {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr char kGraph6Offset = 63;

std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::size_t> to_index(std::string_view token) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> order;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;

    if (!order) {
      if (tokens.size() != 2 || tokens[0] != "n") {
        throw ParseError("expected header \"n <count>\"", line_no);
      }
      order = to_index(tokens[1]);
      if (!order) throw ParseError("invalid vertex count", line_no);
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError("expected \"u v\"", line_no);
    }
    const auto u = to_index(tokens[0]);
    const auto v = to_index(tokens[1]);
    if (!u || !v) throw ParseError("malformed vertex index", line_no);
    if (*u >= *order || *v >= *order) {
      throw ParseError("vertex index out of range", line_no);
    }
    if (*u == *v) throw ParseError("self-loop", line_no);
    edges.emplace_back(static_cast<Vertex>(*u), static_cast<Vertex>(*v));
  }
  if (!order) throw ParseError("missing header \"n <count>\"", line_no);
  return Graph(*order, edges);
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  if (text.empty()) throw ParseError("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) {
      throw ParseError("graph6: character outside 63..126");
    }
  }
  auto value = [&](std::size_t i) { return static_cast<std::size_t>(text[i] - kGraph6Offset); };

  std::size_t n = 0;
  std::size_t header = 0;
  if (text[0] != 126) {
    n = value(0);
    header = 1;
  } else {
    if (text.size() < 4) throw ParseError("graph6: truncated size header");
    if (text[1] == 126) {
      throw SizeLimitError("graph6: 8-byte size form is not supported", text.size(),
                           kGraph6MaxOrder);
    }
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    header = 4;
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = header + (bits + 5) / 6;
  if (text.size() != expected) {
    throw ParseError("graph6: invalid length " + std::to_string(text.size()) +
                     " for order " + std::to_string(n) + " (expected " +
                     std::to_string(expected) + ")");
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::size_t byte = value(header + k / 6);
      if ((byte >> (5 - k % 6)) & 1u) edges.emplace_back(i, j);
    }
  }
  if (k % 6 != 0) {
    const std::size_t byte = value(header + k / 6);
    const std::size_t pad_mask = (std::size_t{1} << (6 - k % 6)) - 1;
    if (byte & pad_mask) throw ParseError("graph6: nonzero padding bits");
  }
  return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) {
    throw SizeLimitError("graph6 cannot encode this order", n, kGraph6MaxOrder);
  }
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kGraph6Offset));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + kGraph6Offset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kGraph6Offset));
    out.push_back(static_cast<char>((n & 63) + kGraph6Offset));
  }
  // Bit k of the upper triangle (column-major) is pair (i, j), i < j,
  // with k = j(j-1)/2 + i.
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<unsigned char> chunks((bits + 5) / 6, 0);
  for (Vertex j = 1; j < n; ++j) {
    const std::size_t column = std::size_t{j} * (j - 1) / 2;
    for (Vertex i : g.neighbors(j)) {
      if (i >= j) break;
      const std::size_t k = column + i;
      chunks[k / 6] |= static_cast<unsigned char>(1u << (5 - k % 6));
    }
  }
  for (unsigned char c : chunks) out.push_back(static_cast<char>(c + kGraph6Offset));
  return out;
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string emit_dot(const Graph& g, std::span<const std::string> labels) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (v < labels.size()) out << " [label=\"" << labels[v] << "\"]";
    out << ";\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

InputFormat detect_format(std::string_view text) {
  text = trim(text);
  if (text.starts_with(kGraph6Header)) return InputFormat::Graph6;
  if (text.empty() || text[0] < 63 || text[0] > 126) return InputFormat::EdgeList;
  for (auto token : split_tokens(text)) {
    if (to_index(token)) return InputFormat::EdgeList;
  }
  return InputFormat::Graph6;
}

Graph parse_graph(std::string_view text, std::optional<InputFormat> format) {
  switch (format.value_or(detect_format(text))) {
    case InputFormat::Graph6:
      return parse_graph6(text);
    case InputFormat::EdgeList:
      return parse_edge_list(text);
  }
  return {};
}

}  // namespace xjoin
