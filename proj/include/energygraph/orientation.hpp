#pragma once

#include <functional>

#include "energygraph/graph.hpp"

namespace energygraph {

/// Breadth-first relabeling from start_set with ascending-original-index
/// tie-breaking; every edge is oriented from lower new label to higher.
/// Members of start_set become exactly the sources of the result.
///
/// Throws std::invalid_argument if start_set is empty, not independent,
/// or misses a component.
EnergyGraph orient_topologically(const UndirectedGraph& g,
                                 const std::vector<VertexId>& start_set);

/// Relabels an acyclic arc set on vertices 1..n into valid energy-graph
/// form (all arcs ascending). Kahn order with smallest original index
/// first, so the result is deterministic. Throws if the arcs contain a
/// directed cycle.
EnergyGraph relabel_topological(int n, const std::vector<Arc>& arcs);

/// Visits every acyclic orientation of g exactly once (identified by its
/// arc set on the original vertex identities), relabeled into valid
/// energy-graph form. The visitor returns false to stop early.
///
/// Exponential in the edge count; refuses graphs with n > max_vertices.
void for_each_acyclic_orientation(
    const UndirectedGraph& g,
    const std::function<bool(const EnergyGraph&)>& visit,
    int max_vertices = 12);

std::vector<EnergyGraph> enumerate_acyclic_orientations(
    const UndirectedGraph& g, int max_vertices = 12);

}  // namespace energygraph
