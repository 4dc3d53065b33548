#pragma once

// Independent brute-force oracle: a discrete-event particle simulation
// that never computes shortest-path levels. Particles move along arcs in
// unit time; the first arrivals at a vertex merge and trigger its own
// particles; anything arriving later dissipates. Used only by tests to
// cross-check the analytic propagation ledger.

#include <map>
#include <vector>

#include "energygraph/graph.hpp"
#include "energygraph/propagation.hpp"

namespace energygraph::oracle {

struct SimResult {
  std::vector<Arc> dissipated_arcs;                 // sorted
  std::map<VertexId, std::vector<int>> arrivals;    // sorted times per vertex
  std::map<VertexId, Energy> sink_energy;
  Energy total_dissipated;
  Energy total_capacitated;
};

inline SimResult simulate(const EnergyGraph& g) {
  auto adj = adjacency(g);
  auto outdeg = out_degrees(g);

  struct Moving {
    VertexId from, to;
    Rational ke;
  };
  std::map<int, std::vector<Moving>> in_flight;  // arrival time -> particles
  std::vector<int> activated(g.n + 1, -1);       // first-arrival time, -1 if not yet
  SimResult result;

  auto fire = [&](VertexId v, const Rational& pool, int now) {
    for (VertexId w : adj.out[v])
      in_flight[now + 1].push_back({v, w, pool / outdeg[v - 1]});
  };

  for (VertexId v = 1; v <= g.n; ++v) {
    if (!adj.in[v].empty()) continue;
    activated[v] = 0;
    result.arrivals[v] = {0};
    if (outdeg[v - 1] > 0) {
      fire(v, Rational(1), 0);
    } else {
      result.sink_energy[v] = Energy{Rational(1), 0};
      result.total_capacitated += Energy{Rational(1), 0};
    }
  }

  while (!in_flight.empty()) {
    auto [now, batch] = *in_flight.begin();
    in_flight.erase(in_flight.begin());
    std::map<VertexId, std::vector<Moving>> by_head;
    for (const auto& p : batch) by_head[p.to].push_back(p);
    for (auto& [v, particles] : by_head) {
      for (const auto& p : particles) result.arrivals[v].push_back(now);
      if (activated[v] == -1) {
        // first arrivals merge and collide with the resident particles
        activated[v] = now;
        Rational pool(0);
        for (const auto& p : particles) pool += p.ke;
        long long mass = static_cast<long long>(particles.size());
        if (outdeg[v - 1] > 0) {
          fire(v, pool, now);
          result.total_capacitated += Energy{Rational(0), mass};
        } else {
          Energy stored{pool, mass};
          result.sink_energy[v] = stored;
          result.total_capacitated += stored;
        }
      } else {
        for (const auto& p : particles) {
          result.dissipated_arcs.emplace_back(p.from, p.to);
          result.total_dissipated += Energy{p.ke, 1};
        }
      }
    }
  }

  std::sort(result.dissipated_arcs.begin(), result.dissipated_arcs.end());
  for (auto& [v, times] : result.arrivals)
    std::sort(times.begin(), times.end());
  return result;
}

}  // namespace energygraph::oracle
