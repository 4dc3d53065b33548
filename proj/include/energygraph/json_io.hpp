#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "energygraph/graph.hpp"
#include "energygraph/propagation.hpp"

namespace energygraph {

// Graph schema: {"n": int, "arcs": [[i,j], ...]}, 1-based, arcs sorted.
// Undirected:   {"n": int, "edges": [[i,j], ...]} with i < j.
// Energies serialize as {"xi": "p/q", "mc2": b}; rationals are exact
// strings, never floats.

nlohmann::json graph_to_json(const EnergyGraph& g);
EnergyGraph graph_from_json(const nlohmann::json& j);

nlohmann::json undirected_to_json(const UndirectedGraph& g);
UndirectedGraph undirected_from_json(const nlohmann::json& j);

nlohmann::json energy_to_json(const Energy& e);
Energy energy_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const PropagationReport& report);

/// Parses a JSON document. Throws std::runtime_error with line info on
/// malformed input.
nlohmann::json parse_json_text(const std::string& text);

/// DOT rendering: black arcs dashed and annotated with their dissipated
/// energy, vertices annotated with arrival strings.
std::string to_dot(const EnergyGraph& g);

}  // namespace energygraph
