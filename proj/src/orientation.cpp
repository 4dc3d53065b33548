#include "energygraph/orientation.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <set>
#include <stdexcept>

namespace energygraph {

EnergyGraph orient_topologically(const UndirectedGraph& g,
                                 const std::vector<VertexId>& start_set) {
  if (start_set.empty())
    throw std::invalid_argument("orient_topologically: empty start set");
  std::set<VertexId> starts(start_set.begin(), start_set.end());
  for (VertexId v : starts)
    if (v < 1 || v > g.n)
      throw std::invalid_argument("orient_topologically: start vertex " +
                                  std::to_string(v) + " out of range");
  for (const auto& [u, v] : g.edges)
    if (starts.count(u) && starts.count(v))
      throw std::invalid_argument(
          "orient_topologically: start set is not independent (edge " +
          std::to_string(u) + "-" + std::to_string(v) + ")");

  std::vector<std::vector<VertexId>> adj(g.n + 1);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());

  // BFS relabeling, ascending original index breaks ties.
  std::vector<int> label(g.n + 1, 0);
  std::queue<VertexId> q;
  int next = 1;
  for (VertexId v : starts) {
    label[v] = next++;
    q.push(v);
  }
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop();
    for (VertexId w : adj[u])
      if (label[w] == 0) {
        label[w] = next++;
        q.push(w);
      }
  }
  if (next != g.n + 1)
    throw std::invalid_argument(
        "orient_topologically: start set does not reach every component");

  std::vector<Arc> arcs;
  arcs.reserve(g.edges.size());
  for (const auto& [u, v] : g.edges) {
    int a = label[u], b = label[v];
    arcs.emplace_back(std::min(a, b), std::max(a, b));
  }
  return make_graph(g.n, std::move(arcs));
}

EnergyGraph relabel_topological(int n, const std::vector<Arc>& arcs) {
  std::vector<std::vector<VertexId>> out(n + 1);
  std::vector<int> indeg(n + 1, 0);
  for (const auto& [u, v] : arcs) {
    out[u].push_back(v);
    ++indeg[v];
  }
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId v = 1; v <= n; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<int> label(n + 1, 0);
  int next = 1;
  while (!ready.empty()) {
    VertexId u = ready.top();
    ready.pop();
    label[u] = next++;
    for (VertexId w : out[u])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (next != n + 1)
    throw std::invalid_argument("relabel_topological: arc set has a cycle");
  std::vector<Arc> relabeled;
  relabeled.reserve(arcs.size());
  for (const auto& [u, v] : arcs) relabeled.emplace_back(label[u], label[v]);
  return make_graph(n, std::move(relabeled));
}

namespace {

// Recursive orientation search with incremental reachability bitmasks.
// reach[v] = set of vertices reachable from v (including v) under the
// partial orientation; adding u->v is pruned when v already reaches u.
struct OrientationSearch {
  int n;
  const std::vector<Edge>& edges;
  const std::function<bool(const EnergyGraph&)>& visit;
  std::vector<Arc> chosen;
  bool stopped = false;

  bool descend(size_t idx, std::vector<std::uint32_t> reach) {
    if (idx == edges.size()) {
      if (!visit(relabel_topological(n, chosen))) stopped = true;
      return !stopped;
    }
    auto [a, b] = edges[idx];
    for (int dir = 0; dir < 2; ++dir) {
      VertexId u = dir == 0 ? a : b;
      VertexId v = dir == 0 ? b : a;
      if (reach[v] & (std::uint32_t{1} << u)) continue;  // would close a cycle
      auto next = reach;
      // every vertex reaching u now also reaches everything v reaches
      for (VertexId w = 1; w <= n; ++w)
        if (next[w] & (std::uint32_t{1} << u)) next[w] |= next[v];
      chosen.emplace_back(u, v);
      bool keep = descend(idx + 1, std::move(next));
      chosen.pop_back();
      if (!keep) return false;
    }
    return true;
  }
};

}  // namespace

void for_each_acyclic_orientation(
    const UndirectedGraph& g,
    const std::function<bool(const EnergyGraph&)>& visit, int max_vertices) {
  if (g.n > max_vertices || g.n > 31)
    throw std::invalid_argument(
        "enumerate_acyclic_orientations: graph has " + std::to_string(g.n) +
        " vertices, limit is " + std::to_string(std::min(max_vertices, 31)));
  std::vector<std::uint32_t> reach(g.n + 1, 0);
  for (VertexId v = 1; v <= g.n; ++v) reach[v] = std::uint32_t{1} << v;
  OrientationSearch search{g.n, g.edges, visit};
  search.descend(0, std::move(reach));
}

std::vector<EnergyGraph> enumerate_acyclic_orientations(
    const UndirectedGraph& g, int max_vertices) {
  std::vector<EnergyGraph> all;
  for_each_acyclic_orientation(
      g,
      [&](const EnergyGraph& oriented) {
        all.push_back(oriented);
        return true;
      },
      max_vertices);
  return all;
}

}  // namespace energygraph
