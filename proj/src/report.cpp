#include "xjoin/report.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace xjoin {
namespace {

std::string braces(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

nlohmann::ordered_json images_json(const std::vector<Permutation>& perms) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& p : perms) out.push_back(std::vector<Vertex>(p.images().begin(), p.images().end()));
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> bipartite_parts(const Graph& g) {
  // Complete bipartite iff the complement is two disjoint cliques.
  const std::size_t n = g.order();
  if (n < 2 || g.edge_count() == 0) return std::nullopt;
  std::vector<int> side(n, -1);
  side[0] = 0;
  for (Vertex v = 1; v < n; ++v) side[v] = g.adjacent(0, v) ? 1 : 0;
  const auto a = static_cast<std::size_t>(std::count(side.begin(), side.end(), 0));
  const std::size_t b = n - a;
  if (b == 0 || g.edge_count() != a * b) return std::nullopt;
  for (const auto& [u, v] : g.edges()) {
    if (side[u] == side[v]) return std::nullopt;
  }
  return std::make_pair(std::min(a, b), std::max(a, b));
}

}  // namespace

nlohmann::ordered_json decomposition_json(const CharacteristicGraph& c) {
  nlohmann::ordered_json out;
  out["n"] = c.class_of.size();
  auto classes = nlohmann::ordered_json::array();
  for (const auto& cls : c.partition.classes) {
    nlohmann::ordered_json entry;
    entry["vertices"] = std::vector<Vertex>(cls.vertices.begin(), cls.vertices.end());
    entry["kind"] = std::string(to_string(cls.kind));
    classes.push_back(std::move(entry));
  }
  out["classes"] = std::move(classes);
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : c.quotient.edges()) edges.push_back({u, v});
  out["quotient_edges"] = std::move(edges);
  out["colors"] = c.colors;
  out["reduced"] = is_reduced(c);
  return out;
}

nlohmann::ordered_json group_json(const GroupDescription& group) {
  nlohmann::ordered_json out;
  out["order"] = group.order.str();
  out["kernel_order"] = group.kernel_order.str();
  out["quotient_group_order"] = group.quotient_group_order.str();
  out["kernel_generators"] = images_json(group.kernel_generators);
  out["complement_generators"] = images_json(group.complement_generators);
  return out;
}

std::string describe_graph(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t m = g.edge_count();
  const std::string sn = std::to_string(n);
  if (n == 0) return "empty graph";
  if (m == n * (n - 1) / 2) return "K_" + sn;
  if (m == 0) return "Phi_" + sn;
  std::size_t max_degree = 0;
  bool regular2 = true;
  for (Vertex v = 0; v < n; ++v) {
    max_degree = std::max(max_degree, g.degree(v));
    regular2 = regular2 && g.degree(v) == 2;
  }
  if (is_connected(g)) {
    if (regular2 && m == n) return "C_" + sn;
    if (max_degree <= 2 && m + 1 == n) return "P_" + sn;
  }
  if (auto parts = bipartite_parts(g)) {
    return "K_{" + std::to_string(parts->first) + "," + std::to_string(parts->second) + "}";
  }
  return sn + " vertices, " + std::to_string(m) + " edges";
}

std::string decomposition_text(const CharacteristicGraph& c) {
  std::ostringstream out;
  const auto& classes = c.partition.classes;
  out << classes.size() << (classes.size() == 1 ? " class: " : " classes: ");
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i) out << ", ";
    out << braces(classes[i].vertices) << ' ' << to_string(classes[i].kind);
  }
  out << "; quotient " << describe_graph(c.quotient) << "; reduced: "
      << (is_reduced(c) ? "true" : "false");
  return out.str();
}

std::string group_text(const GroupDescription& group) {
  std::ostringstream out;
  out << "order: " << group.order << '\n'
      << "kernel order: " << group.kernel_order << '\n'
      << "quotient group order: " << group.quotient_group_order << '\n';
  out << "kernel generators:";
  for (const auto& p : group.kernel_generators) out << ' ' << to_cycle_string(p);
  out << "\ncomplement generators:";
  for (const auto& p : group.complement_generators) out << ' ' << to_cycle_string(p);
  out << '\n';
  return out.str();
}

std::vector<std::string> fiber_labels(const CharacteristicGraph& c) {
  std::vector<std::string> labels;
  for (Vertex b = 0; b < c.fibers.size(); ++b) {
    labels.push_back(std::to_string(b) + ": " + std::to_string(c.fibers[b].size) + " " +
                     std::string(to_string(c.fibers[b].kind)));
  }
  return labels;
}

}  // namespace xjoin
