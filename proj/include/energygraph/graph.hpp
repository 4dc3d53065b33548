#pragma once

#include <string>
#include <utility>
#include <vector>

namespace energygraph {

/// 1-based vertex index, matching the u_1..u_n labeling convention.
using VertexId = int;

/// Directed arc (tail, head). In a valid energy graph tail < head.
using Arc = std::pair<VertexId, VertexId>;

/// Undirected edge stored with first < second.
using Edge = std::pair<VertexId, VertexId>;

/// Simple DAG on vertices 1..n where every arc (i, j) has i < j.
/// This labeling constraint forces u_1 to be a source and u_n a sink.
/// Arcs are kept sorted ascending by (tail, head).
struct EnergyGraph {
  int n = 0;
  std::vector<Arc> arcs;

  bool operator==(const EnergyGraph&) const = default;
};

/// Simple undirected graph, pre-orientation input.
struct UndirectedGraph {
  int n = 0;
  std::vector<Edge> edges;
};

struct ValidationResult {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Builds a graph with arcs sorted and de-duplicated. Does not validate.
EnergyGraph make_graph(int n, std::vector<Arc> arcs);

UndirectedGraph make_undirected(int n, std::vector<Edge> edges);

/// Checks all EnergyGraph invariants: vertex range, i < j, no duplicates.
ValidationResult validate(const EnergyGraph& g);

/// Vertices with in-degree 0, ascending. Nonempty for any valid graph.
std::vector<VertexId> sources(const EnergyGraph& g);

/// Vertices with out-degree 0, ascending. Nonempty for any valid graph.
std::vector<VertexId> sinks(const EnergyGraph& g);

std::vector<int> out_degrees(const EnergyGraph& g);
std::vector<int> in_degrees(const EnergyGraph& g);

/// Out- and in-neighbor lists, indexed by vertex (entry 0 unused).
struct Adjacency {
  std::vector<std::vector<VertexId>> out;
  std::vector<std::vector<VertexId>> in;
};

Adjacency adjacency(const EnergyGraph& g);

/// Underlying undirected simple graph.
UndirectedGraph underlying(const EnergyGraph& g);

bool is_connected(const UndirectedGraph& g);

bool is_bipartite(const UndirectedGraph& g);

}  // namespace energygraph
