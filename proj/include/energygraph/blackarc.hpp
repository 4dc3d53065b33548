#pragma once

#include "energygraph/graph.hpp"

namespace energygraph {

/// Output of the iterative black-arc sweep: per-iteration newly
/// blackened arc sets and their union B_{n-1}(G).
struct BlackCloud {
  std::vector<std::vector<Arc>> steps;  // one entry per iteration j = 1..n-1
  std::vector<Arc> cumulative;          // sorted union of the steps
};

/// Residual graph after removing the black cloud; same vertex set.
struct SolidSubgraph {
  EnergyGraph graph;
};

struct BlackArcResult {
  BlackCloud cloud;
  SolidSubgraph solid;
  int b_count = 0;
};

/// Out-open neighborhood of u_j in the residual graph: its head vertices.
std::vector<VertexId> head_neighborhood(const EnergyGraph& residual,
                                        VertexId j);

/// Iterative sweep j = 1..n-1: blacken the arcs of the subgraph induced
/// by u_j's head vertices in the current residual, delete them, repeat.
/// Terminates in exactly n-1 iterations. Intended for graphs in
/// canonical ascending labeling; cross-validated against the
/// arrival-time detector. Throws std::invalid_argument for n < 2.
BlackArcResult jaco_black_arc_algorithm(const EnergyGraph& g);

/// G minus the cloud arcs. Throws if a cloud arc is not in the graph.
SolidSubgraph solid_subgraph(const EnergyGraph& g, const BlackCloud& cloud);

/// Runs the same sweep but counts, at each step i, the triangles of the
/// residual underlying graph through u_i whose other two vertices lie in
/// u_i's head neighborhood. Equals the black cloud size.
long long primitive_degree_sum(const EnergyGraph& g);

/// min |black arcs| over all acyclic orientations of g.
/// Throws std::invalid_argument when g.n exceeds size_guard.
int black_arc_number_min(const UndirectedGraph& g, int size_guard = 10);

/// Sum of per-block black-arc counts over the arc-partition blocks, each
/// block keeping its arc directions and relabeled by ascending original
/// index.
long long decompose_and_sum(const EnergyGraph& g);

/// floor(n/2) - 1, the closed form for the mod-4 family; n >= 4.
int mod4_closed_form(int n);

}  // namespace energygraph
