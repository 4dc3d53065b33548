#include "energygraph/blackarc.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "energygraph/blocks.hpp"
#include "energygraph/orientation.hpp"
#include "energygraph/propagation.hpp"

namespace energygraph {

std::vector<VertexId> head_neighborhood(const EnergyGraph& residual,
                                        VertexId j) {
  if (j < 1 || j > residual.n)
    throw std::invalid_argument("head_neighborhood: vertex out of range");
  std::vector<VertexId> heads;
  for (const auto& [u, v] : residual.arcs)
    if (u == j) heads.push_back(v);
  return heads;
}

BlackArcResult jaco_black_arc_algorithm(const EnergyGraph& g) {
  if (g.n < 2)
    throw std::invalid_argument("black arc sweep needs at least 2 vertices");
  std::set<Arc> residual(g.arcs.begin(), g.arcs.end());
  BlackArcResult result;
  for (VertexId j = 1; j <= g.n - 1; ++j) {
    std::set<VertexId> heads;
    for (const auto& [u, v] : residual)
      if (u == j) heads.insert(v);
    std::vector<Arc> newly_black;
    for (const auto& arc : residual)
      if (heads.count(arc.first) && heads.count(arc.second))
        newly_black.push_back(arc);
    for (const auto& arc : newly_black) residual.erase(arc);
    result.cloud.cumulative.insert(result.cloud.cumulative.end(),
                                   newly_black.begin(), newly_black.end());
    result.cloud.steps.push_back(std::move(newly_black));
  }
  std::sort(result.cloud.cumulative.begin(), result.cloud.cumulative.end());
  result.solid.graph =
      make_graph(g.n, {residual.begin(), residual.end()});
  result.b_count = static_cast<int>(result.cloud.cumulative.size());
  return result;
}

SolidSubgraph solid_subgraph(const EnergyGraph& g, const BlackCloud& cloud) {
  std::set<Arc> arcs(g.arcs.begin(), g.arcs.end());
  for (const auto& arc : cloud.cumulative) {
    if (!arcs.erase(arc))
      throw std::invalid_argument("cloud arc (" +
                                  std::to_string(arc.first) + "," +
                                  std::to_string(arc.second) +
                                  ") is not in the graph");
  }
  return SolidSubgraph{make_graph(g.n, {arcs.begin(), arcs.end()})};
}

long long primitive_degree_sum(const EnergyGraph& g) {
  // Counts, per sweep step, the triangles of the residual underlying
  // graph through u_i with both other corners among u_i's heads. The
  // underlying adjacency is symmetric, which keeps this route
  // independent of arc directions except for picking the heads.
  std::set<Arc> residual(g.arcs.begin(), g.arcs.end());
  auto adjacent = [&](VertexId a, VertexId b) {
    return residual.count({std::min(a, b), std::max(a, b)}) > 0;
  };
  long long total = 0;
  for (VertexId i = 1; i <= g.n - 1; ++i) {
    std::vector<VertexId> heads;
    for (const auto& [u, v] : residual)
      if (u == i) heads.push_back(v);
    std::vector<Arc> to_delete;
    for (size_t a = 0; a < heads.size(); ++a)
      for (size_t b = a + 1; b < heads.size(); ++b) {
        VertexId x = std::min(heads[a], heads[b]);
        VertexId y = std::max(heads[a], heads[b]);
        if (adjacent(x, y)) {
          ++total;
          to_delete.emplace_back(x, y);
        }
      }
    for (const auto& arc : to_delete) residual.erase(arc);
  }
  return total;
}

int black_arc_number_min(const UndirectedGraph& g, int size_guard) {
  if (g.n > size_guard)
    throw std::invalid_argument("black_arc_number_min: graph has " +
                                std::to_string(g.n) +
                                " vertices, limit is " +
                                std::to_string(size_guard));
  int best = std::numeric_limits<int>::max();
  for_each_acyclic_orientation(
      g,
      [&](const EnergyGraph& oriented) {
        int count = static_cast<int>(black_arcs_by_arrival(oriented).size());
        best = std::min(best, count);
        return best > 0;
      },
      size_guard);
  return best == std::numeric_limits<int>::max() ? 0 : best;
}

long long decompose_and_sum(const EnergyGraph& g) {
  long long total = 0;
  for (const auto& block : arc_partition_blocks(g)) {
    // Relabel the block's vertices by ascending original index; order is
    // preserved, so the block stays a valid energy graph.
    std::set<VertexId> verts;
    for (const auto& [u, v] : block) {
      verts.insert(u);
      verts.insert(v);
    }
    std::map<VertexId, VertexId> relabel;
    VertexId next = 1;
    for (VertexId v : verts) relabel[v] = next++;
    std::vector<Arc> arcs;
    arcs.reserve(block.size());
    for (const auto& [u, v] : block) arcs.emplace_back(relabel[u], relabel[v]);
    EnergyGraph sub = make_graph(static_cast<int>(verts.size()), std::move(arcs));
    total += static_cast<long long>(black_arcs_by_arrival(sub).size());
  }
  return total;
}

int mod4_closed_form(int n) {
  if (n < 4) throw std::invalid_argument("mod4_closed_form needs n >= 4");
  return n / 2 - 1;
}

}  // namespace energygraph
