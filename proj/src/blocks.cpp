#include "energygraph/blocks.hpp"

#include <algorithm>
#include <map>
#include <stack>

namespace energygraph {

namespace {

// Iterative Tarjan block decomposition. Assigns each edge a block id and
// collects cut vertices.
struct BlockFinder {
  int n;
  std::vector<std::vector<std::pair<VertexId, int>>> adj;  // (neighbor, edge id)
  std::vector<int> disc, low;
  std::vector<char> is_cut;
  std::vector<std::vector<int>> blocks;  // edge ids per block
  std::stack<int> edge_stack;
  int timer = 1;

  explicit BlockFinder(const UndirectedGraph& g)
      : n(g.n),
        adj(g.n + 1),
        disc(g.n + 1, 0),
        low(g.n + 1, 0),
        is_cut(g.n + 1, 0) {
    for (size_t e = 0; e < g.edges.size(); ++e) {
      auto [u, v] = g.edges[e];
      adj[u].emplace_back(v, static_cast<int>(e));
      adj[v].emplace_back(u, static_cast<int>(e));
    }
  }

  void pop_block(int until_edge) {
    std::vector<int> block;
    while (true) {
      int e = edge_stack.top();
      edge_stack.pop();
      block.push_back(e);
      if (e == until_edge) break;
    }
    blocks.push_back(std::move(block));
  }

  void run_from(VertexId root) {
    struct Frame {
      VertexId v;
      int parent_edge;
      size_t next = 0;
    };
    std::stack<Frame> st;
    st.push({root, -1});
    disc[root] = low[root] = timer++;
    int root_children = 0;
    while (!st.empty()) {
      Frame& f = st.top();
      if (f.next < adj[f.v].size()) {
        auto [w, e] = adj[f.v][f.next++];
        if (e == f.parent_edge) continue;
        if (disc[w] == 0) {
          if (f.v == root) ++root_children;
          edge_stack.push(e);
          disc[w] = low[w] = timer++;
          st.push({w, e});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push(e);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        VertexId v = f.v;
        int pe = f.parent_edge;
        st.pop();
        if (!st.empty()) {
          VertexId parent = st.top().v;
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] >= disc[parent]) {
            if (parent != root) is_cut[parent] = 1;
            pop_block(pe);
          }
        }
      }
    }
    if (root_children > 1) is_cut[root] = 1;
  }

  void run() {
    for (VertexId v = 1; v <= n; ++v)
      if (disc[v] == 0) run_from(v);
  }
};

}  // namespace

std::vector<std::vector<Arc>> arc_partition_blocks(const EnergyGraph& g) {
  // Underlying edges keep a 1:1 mapping to arcs: edge e <-> g.arcs[e].
  UndirectedGraph ug{g.n, {g.arcs.begin(), g.arcs.end()}};
  BlockFinder finder(ug);
  finder.run();
  std::vector<std::vector<Arc>> result;
  result.reserve(finder.blocks.size());
  for (auto& block : finder.blocks) {
    std::vector<Arc> arcs;
    arcs.reserve(block.size());
    for (int e : block) arcs.push_back(g.arcs[e]);
    std::sort(arcs.begin(), arcs.end());
    result.push_back(std::move(arcs));
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<VertexId> cut_vertices(const UndirectedGraph& g) {
  BlockFinder finder(g);
  finder.run();
  std::vector<VertexId> cuts;
  for (VertexId v = 1; v <= g.n; ++v)
    if (finder.is_cut[v]) cuts.push_back(v);
  return cuts;
}

}  // namespace energygraph
