#pragma once

#include <random>
#include <vector>

#include "energygraph/graph.hpp"
#include "energygraph/orientation.hpp"
#include "energygraph/sequences.hpp"

namespace energygraph::testutil {

/// Random connected undirected graph: a random spanning tree plus a few
/// extra edges.
inline UndirectedGraph random_connected(int n, std::mt19937& rng,
                                        double extra_edge_factor = 0.7) {
  std::vector<Edge> edges;
  for (int v = 2; v <= n; ++v) {
    std::uniform_int_distribution<int> pick(1, v - 1);
    edges.emplace_back(pick(rng), v);
  }
  int extra = static_cast<int>(n * extra_edge_factor);
  std::uniform_int_distribution<int> pick(1, n);
  for (int e = 0; e < extra; ++e) {
    int a = pick(rng), b = pick(rng);
    if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return make_undirected(n, std::move(edges));
}

/// Random valid energy graph: random connected graph oriented from a
/// single random start vertex.
inline EnergyGraph random_energy_graph(int n, std::mt19937& rng) {
  auto g = random_connected(n, rng);
  std::uniform_int_distribution<int> pick(1, n);
  return orient_topologically(g, {pick(rng)});
}

/// Random Jaco-type graph from a random explicit sequence.
inline EnergyGraph random_jaco(int n, std::mt19937& rng) {
  std::uniform_int_distribution<long long> term(0, 5);
  std::vector<long long> terms;
  for (int i = 0; i < n; ++i) terms.push_back(term(rng));
  return jaco_graph(SequenceSpec::list(std::move(terms)), n);
}

/// Connected graph with at least one cut vertex: two random connected
/// graphs glued at a single shared vertex, oriented from one source.
inline EnergyGraph random_cut_vertex_graph(int total, std::mt19937& rng) {
  int left = total / 2 + 1;          // shared vertex counted in both halves
  int right = total - left + 1;
  auto a = random_connected(left, rng);
  auto b = random_connected(right, rng);
  std::vector<Edge> edges = a.edges;
  // b's vertex 1 becomes the shared vertex `left`
  auto remap = [&](VertexId v) { return v == 1 ? left : left + v - 1; };
  for (const auto& [u, v] : b.edges) {
    VertexId x = remap(u), y = remap(v);
    edges.emplace_back(std::min(x, y), std::max(x, y));
  }
  auto glued = make_undirected(total, std::move(edges));
  std::uniform_int_distribution<int> pick(1, total);
  return orient_topologically(glued, {pick(rng)});
}

}  // namespace energygraph::testutil
