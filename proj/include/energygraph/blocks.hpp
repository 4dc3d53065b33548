#pragma once

#include "energygraph/graph.hpp"

namespace energygraph {

/// Maximal partition of the arc set such that any two induced
/// arc-subgraphs share at most one vertex (the biconnected blocks of the
/// underlying graph, with bridges as single-arc blocks). Blocks and the
/// arcs inside them are sorted ascending.
std::vector<std::vector<Arc>> arc_partition_blocks(const EnergyGraph& g);

/// Cut vertices of the underlying undirected graph, ascending.
std::vector<VertexId> cut_vertices(const UndirectedGraph& g);

}  // namespace energygraph
