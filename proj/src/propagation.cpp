#include "energygraph/propagation.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace energygraph {

std::string energy_to_string(const Energy& e) {
  return rational_to_string(e.xi) + " xi + " +
         std::to_string(e.mass_units) + " mc2";
}

std::vector<int> levels(const EnergyGraph& g) {
  auto adj = adjacency(g);
  std::vector<int> level(g.n + 1, -1);
  std::queue<VertexId> q;
  for (VertexId v : sources(g)) {
    level[v] = 0;
    q.push(v);
  }
  if (g.n > 0 && q.empty())
    throw std::logic_error("energy graph without a source");
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop();
    for (VertexId w : adj.out[u])
      if (level[w] == -1) {
        level[w] = level[u] + 1;
        q.push(w);
      }
  }
  level.erase(level.begin());
  return level;
}

std::vector<ArrivalString> arrival_strings(const EnergyGraph& g) {
  auto level = levels(g);
  auto adj = adjacency(g);
  std::vector<ArrivalString> strings;
  strings.reserve(g.n);
  for (VertexId v = 1; v <= g.n; ++v) {
    ArrivalString s{v, {}};
    if (adj.in[v].empty()) {
      s.times = {0};
    } else {
      for (VertexId u : adj.in[v]) s.times.push_back(level[u - 1] + 1);
      std::sort(s.times.begin(), s.times.end());
    }
    strings.push_back(std::move(s));
  }
  return strings;
}

std::vector<Arc> black_arcs_by_arrival(const EnergyGraph& g) {
  auto level = levels(g);
  std::vector<Arc> black;
  for (const auto& [u, v] : g.arcs)
    if (level[u - 1] + 1 > level[v - 1]) black.emplace_back(u, v);
  return black;
}

PropagationReport propagate(const EnergyGraph& g) {
  PropagationReport report;
  report.levels = levels(g);
  report.arrival_strings = arrival_strings(g);
  report.black_arcs = black_arcs_by_arrival(g);

  auto adj = adjacency(g);
  auto outdeg = out_degrees(g);
  std::set<Arc> black_set(report.black_arcs.begin(), report.black_arcs.end());

  // Ascending vertex index is a topological order: arcs satisfy i < j.
  report.pool.assign(g.n, Rational(0));
  report.resting_mass.assign(g.n, 0);
  for (VertexId v = 1; v <= g.n; ++v) {
    if (adj.in[v].empty()) {
      report.pool[v - 1] = 1;  // each source is allocated xi
    } else {
      Rational sum(0);
      long long first_arrivals = 0;
      for (VertexId u : adj.in[v]) {
        Arc arc{u, v};
        if (!black_set.count(arc)) {
          sum += report.arc_ke.at(arc);
          ++first_arrivals;
        }
      }
      report.pool[v - 1] = sum;
      if (outdeg[v - 1] > 0) report.resting_mass[v - 1] = first_arrivals;
    }
    if (outdeg[v - 1] > 0) {
      Rational share = report.pool[v - 1] / outdeg[v - 1];
      for (VertexId w : adj.out[v]) report.arc_ke[{v, w}] = share;
    }
  }

  for (const auto& arc : report.black_arcs) {
    Energy e{report.arc_ke.at(arc), 1};
    report.dissipated_per_arc[arc] = e;
    report.total_black_energy += e;
  }
  for (VertexId t : sinks(g)) {
    long long first_arrivals = 0;
    for (VertexId u : adj.in[t])
      if (!black_set.count(Arc{u, t})) ++first_arrivals;
    Energy e{report.pool[t - 1], first_arrivals};
    report.capacitated_per_sink[t] = e;
    report.total_capacitated += e;
  }
  for (VertexId v = 1; v <= g.n; ++v)
    report.total_capacitated += Energy{Rational(0), report.resting_mass[v - 1]};

  return report;
}

Energy total_black_energy(const EnergyGraph& g) {
  return propagate(g).total_black_energy;
}

bool check_conservation(const PropagationReport& report,
                        const EnergyGraph& g) {
  Energy total = report.total_black_energy + report.total_capacitated;
  Energy expected{Rational(static_cast<long long>(sources(g).size())),
                  static_cast<long long>(g.arcs.size())};
  return total == expected;
}

}  // namespace energygraph
