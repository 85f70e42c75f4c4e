#pragma once

#include <string>

#include <json.hpp>

#include "xjoin/automorphism.hpp"
#include "xjoin/decomposition.hpp"

namespace xjoin {

/// { "n", "classes": [{ "vertices", "kind" }], "quotient_edges", "colors", "reduced" }
nlohmann::ordered_json decomposition_json(const CharacteristicGraph& c);

/// Orders are decimal strings; permutations are image arrays.
nlohmann::ordered_json group_json(const GroupDescription& group);

/// Short name for recognisable shapes (K_n, Phi_n, C_n, P_n, K_{a,b}),
/// otherwise "<n> vertices, <m> edges".
std::string describe_graph(const Graph& g);

/// "2 classes: {0,2} independent, {1,3} independent; quotient K_2; reduced: true"
std::string decomposition_text(const CharacteristicGraph& c);

std::string group_text(const GroupDescription& group);

/// Node labels "<quotient vertex>: <size> <kind>" for DOT output.
std::vector<std::string> fiber_labels(const CharacteristicGraph& c);

}  // namespace xjoin
