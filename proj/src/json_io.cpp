#include "energygraph/json_io.hpp"

#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace energygraph {

using nlohmann::json;

json graph_to_json(const EnergyGraph& g) {
  json arcs = json::array();
  for (const auto& [i, j] : g.arcs) arcs.push_back({i, j});
  return json{{"n", g.n}, {"arcs", std::move(arcs)}};
}

EnergyGraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("arcs"))
    throw std::invalid_argument(
        "graph JSON must be {\"n\": int, \"arcs\": [[i,j], ...]}");
  std::vector<Arc> arcs;
  for (const auto& pair : j.at("arcs")) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("arc entries must be [tail, head] pairs");
    arcs.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  }
  return make_graph(j.at("n").get<int>(), std::move(arcs));
}

json undirected_to_json(const UndirectedGraph& g) {
  json edges = json::array();
  for (const auto& [i, j] : g.edges) edges.push_back({i, j});
  return json{{"n", g.n}, {"edges", std::move(edges)}};
}

UndirectedGraph undirected_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument(
        "graph JSON must be {\"n\": int, \"edges\": [[i,j], ...]}");
  std::vector<Edge> edges;
  for (const auto& pair : j.at("edges")) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("edge entries must be [i, j] pairs");
    edges.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  }
  return make_undirected(j.at("n").get<int>(), std::move(edges));
}

json energy_to_json(const Energy& e) {
  return json{{"xi", rational_to_string(e.xi)}, {"mc2", e.mass_units}};
}

Energy energy_from_json(const json& j) {
  return Energy{parse_rational(j.at("xi").get<std::string>()),
                j.at("mc2").get<long long>()};
}

json report_to_json(const PropagationReport& report) {
  json j;
  j["levels"] = report.levels;
  json strings = json::object();
  for (const auto& s : report.arrival_strings)
    strings[std::to_string(s.vertex)] = s.times;
  j["arrival_strings"] = std::move(strings);
  json black = json::array();
  for (const auto& [u, v] : report.black_arcs) black.push_back({u, v});
  j["black_arcs"] = std::move(black);
  json pool = json::object();
  for (size_t v = 0; v < report.pool.size(); ++v)
    pool[std::to_string(v + 1)] = rational_to_string(report.pool[v]);
  j["pool"] = std::move(pool);
  json ke = json::array();
  for (const auto& [arc, r] : report.arc_ke)
    ke.push_back({{"arc", {arc.first, arc.second}},
                  {"xi", rational_to_string(r)}});
  j["arc_ke"] = std::move(ke);
  json dissipated = json::array();
  for (const auto& [arc, e] : report.dissipated_per_arc)
    dissipated.push_back(
        {{"arc", {arc.first, arc.second}}, {"energy", energy_to_json(e)}});
  j["dissipated_per_arc"] = std::move(dissipated);
  json capacitated = json::object();
  for (const auto& [v, e] : report.capacitated_per_sink)
    capacitated[std::to_string(v)] = energy_to_json(e);
  j["capacitated_per_sink"] = std::move(capacitated);
  j["resting_mass"] = report.resting_mass;
  j["total_black_energy"] = energy_to_json(report.total_black_energy);
  j["total_capacitated"] = energy_to_json(report.total_capacitated);
  return j;
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& err) {
    // byte offset -> line number for the error message
    size_t line = 1;
    for (size_t p = 0; p < err.byte && p < text.size(); ++p)
      if (text[p] == '\n') ++line;
    throw std::runtime_error("JSON parse error at line " +
                             std::to_string(line) + ": " + err.what());
  }
}

std::string to_dot(const EnergyGraph& g) {
  PropagationReport report = propagate(g);
  std::ostringstream out;
  out << "digraph energy {\n";
  out << "  rankdir=LR;\n";
  for (VertexId v = 1; v <= g.n; ++v) {
    out << "  u" << v << " [label=\"u" << v << " ~ <";
    const auto& times = report.arrival_strings[v - 1].times;
    for (size_t i = 0; i < times.size(); ++i) {
      if (i) out << ",";
      out << times[i];
    }
    out << ">\"];\n";
  }
  for (const auto& arc : g.arcs) {
    out << "  u" << arc.first << " -> u" << arc.second;
    auto diss = report.dissipated_per_arc.find(arc);
    if (diss != report.dissipated_per_arc.end())
      out << " [style=dashed, label=\"" << energy_to_string(diss->second)
          << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace energygraph
