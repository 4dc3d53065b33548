#include "energygraph/graph.hpp"

#include <algorithm>
#include <queue>

namespace energygraph {

EnergyGraph make_graph(int n, std::vector<Arc> arcs) {
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return EnergyGraph{n, std::move(arcs)};
}

UndirectedGraph make_undirected(int n, std::vector<Edge> edges) {
  for (auto& e : edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return UndirectedGraph{n, std::move(edges)};
}

ValidationResult validate(const EnergyGraph& g) {
  ValidationResult result;
  if (g.n < 0) result.violations.push_back("negative vertex count");
  for (const auto& [i, j] : g.arcs) {
    if (i < 1 || i > g.n || j < 1 || j > g.n) {
      result.violations.push_back("arc (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") out of range");
      continue;
    }
    if (i == j)
      result.violations.push_back("self-loop at " + std::to_string(i));
    else if (i > j)
      result.violations.push_back("arc (" + std::to_string(i) + "," +
                                  std::to_string(j) +
                                  ") goes from higher to lower label");
  }
  for (size_t a = 1; a < g.arcs.size(); ++a)
    if (g.arcs[a] == g.arcs[a - 1])
      result.violations.push_back(
          "duplicate arc (" + std::to_string(g.arcs[a].first) + "," +
          std::to_string(g.arcs[a].second) + ")");
  return result;
}

std::vector<int> out_degrees(const EnergyGraph& g) {
  std::vector<int> deg(g.n + 1, 0);
  for (const auto& [i, j] : g.arcs) ++deg[i];
  deg.erase(deg.begin());
  return deg;
}

std::vector<int> in_degrees(const EnergyGraph& g) {
  std::vector<int> deg(g.n + 1, 0);
  for (const auto& [i, j] : g.arcs) ++deg[j];
  deg.erase(deg.begin());
  return deg;
}

std::vector<VertexId> sources(const EnergyGraph& g) {
  auto deg = in_degrees(g);
  std::vector<VertexId> out;
  for (VertexId v = 1; v <= g.n; ++v)
    if (deg[v - 1] == 0) out.push_back(v);
  return out;
}

std::vector<VertexId> sinks(const EnergyGraph& g) {
  auto deg = out_degrees(g);
  std::vector<VertexId> out;
  for (VertexId v = 1; v <= g.n; ++v)
    if (deg[v - 1] == 0) out.push_back(v);
  return out;
}

Adjacency adjacency(const EnergyGraph& g) {
  Adjacency adj;
  adj.out.resize(g.n + 1);
  adj.in.resize(g.n + 1);
  for (const auto& [i, j] : g.arcs) {
    adj.out[i].push_back(j);
    adj.in[j].push_back(i);
  }
  return adj;
}

UndirectedGraph underlying(const EnergyGraph& g) {
  std::vector<Edge> edges(g.arcs.begin(), g.arcs.end());
  return make_undirected(g.n, std::move(edges));
}

namespace {

std::vector<std::vector<VertexId>> neighbor_lists(const UndirectedGraph& g) {
  std::vector<std::vector<VertexId>> adj(g.n + 1);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

}  // namespace

bool is_connected(const UndirectedGraph& g) {
  if (g.n <= 1) return true;
  auto adj = neighbor_lists(g);
  std::vector<char> seen(g.n + 1, 0);
  std::queue<VertexId> q;
  q.push(1);
  seen[1] = 1;
  int count = 0;
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop();
    ++count;
    for (VertexId w : adj[u])
      if (!seen[w]) {
        seen[w] = 1;
        q.push(w);
      }
  }
  return count == g.n;
}

bool is_bipartite(const UndirectedGraph& g) {
  auto adj = neighbor_lists(g);
  std::vector<int> color(g.n + 1, -1);
  for (VertexId s = 1; s <= g.n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty()) {
      VertexId u = q.front();
      q.pop();
      for (VertexId w : adj[u]) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          q.push(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace energygraph
