#include "xjoin/construction.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace xjoin {

void validate_fiber_spec(const FiberSpec& spec) {
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const auto& f = spec[i];
    if (f.size == 0) {
      throw std::invalid_argument("fiber " + std::to_string(i) + " has size 0");
    }
    if ((f.kind == FiberKind::Singleton) != (f.size == 1)) {
      throw std::invalid_argument("fiber " + std::to_string(i) +
                                  ": singleton kind must go with size 1");
    }
  }
}

FiberSpec parse_fiber_spec(std::string_view text) {
  FiberSpec spec;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token.size() < 2 || (token[0] != 'c' && token[0] != 'i')) {
      throw std::invalid_argument("bad fiber token \"" + token + "\" (want c<k> or i<k>)");
    }
    std::size_t size = 0;
    const char* first = token.data() + 1;
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, size);
    if (ec != std::errc() || ptr != last || size == 0) {
      throw std::invalid_argument("bad fiber size in \"" + token + "\"");
    }
    FiberKind kind = token[0] == 'c' ? FiberKind::Clique : FiberKind::Independent;
    if (size == 1) kind = FiberKind::Singleton;
    spec.push_back({size, kind});
  }
  return spec;
}

std::string format_fiber_spec(const FiberSpec& spec) {
  std::string out;
  for (const auto& f : spec) {
    if (!out.empty()) out += ' ';
    out += f.kind == FiberKind::Clique ? 'c' : 'i';
    out += std::to_string(f.size);
  }
  return out;
}

JoinResult x_join(const Graph& base, const FiberSpec& spec) {
  if (spec.size() != base.order()) {
    throw std::invalid_argument("fiber spec has " + std::to_string(spec.size()) +
                                " entries for a base graph of order " +
                                std::to_string(base.order()));
  }
  validate_fiber_spec(spec);

  std::vector<Vertex> start(spec.size() + 1, 0);
  for (std::size_t x = 0; x < spec.size(); ++x) {
    start[x + 1] = start[x] + static_cast<Vertex>(spec[x].size);
  }
  JoinResult out;
  out.class_map.resize(start.back());
  std::vector<Edge> edges;
  for (Vertex x = 0; x < spec.size(); ++x) {
    for (Vertex a = start[x]; a < start[x + 1]; ++a) {
      out.class_map[a] = x;
      if (spec[x].kind == FiberKind::Clique) {
        for (Vertex b = a + 1; b < start[x + 1]; ++b) edges.emplace_back(a, b);
      }
    }
  }
  for (const auto& [x, y] : base.edges()) {
    for (Vertex a = start[x]; a < start[x + 1]; ++a) {
      for (Vertex b = start[y]; b < start[y + 1]; ++b) edges.emplace_back(a, b);
    }
  }
  out.graph = Graph(start.back(), edges);
  return out;
}

Graph lex_product(const Graph& outer, const Graph& inner) {
  const std::size_t m = inner.order();
  auto id = [m](Vertex x, Vertex y) { return static_cast<Vertex>(x * m + y); };
  std::vector<Edge> edges;
  for (Vertex x = 0; x < outer.order(); ++x) {
    for (const auto& [y1, y2] : inner.edges()) edges.emplace_back(id(x, y1), id(x, y2));
  }
  for (const auto& [x1, x2] : outer.edges()) {
    for (Vertex y1 = 0; y1 < m; ++y1) {
      for (Vertex y2 = 0; y2 < m; ++y2) edges.emplace_back(id(x1, y1), id(x2, y2));
    }
  }
  return Graph(outer.order() * m, edges);
}

bool join_is_reduced(const Graph& base, const FiberSpec& spec) {
  validate_fiber_spec(spec);
  return is_reduced(base, spec);
}

}  // namespace xjoin
