#pragma once

#include <map>

#include "energygraph/graph.hpp"
#include "energygraph/rational.hpp"

namespace energygraph {

/// Symbolic energy value a*xi + b*mc^2. The potential-energy unit xi and
/// the mass-energy quantum mc^2 are never evaluated numerically, so
/// every figure is exactly representable.
struct Energy {
  Rational xi;
  long long mass_units = 0;

  Energy& operator+=(const Energy& other) {
    xi += other.xi;
    mass_units += other.mass_units;
    return *this;
  }
  friend Energy operator+(Energy a, const Energy& b) { return a += b; }
  bool operator==(const Energy&) const = default;
};

/// "p/q xi + b mc2"
std::string energy_to_string(const Energy& e);

/// Sorted multiset of particle arrival times at a vertex. Sources carry
/// the single entry 0; otherwise one entry per in-arc.
struct ArrivalString {
  VertexId vertex = 0;
  std::vector<int> times;

  bool operator==(const ArrivalString&) const = default;
};

/// Full exact ledger of one exhaustive propagation run.
struct PropagationReport {
  std::vector<int> levels;                      // [v-1]
  std::vector<ArrivalString> arrival_strings;   // [v-1]
  std::vector<Arc> black_arcs;                  // sorted
  std::vector<Rational> pool;                   // [v-1], kinetic pool
  std::map<Arc, Rational> arc_ke;               // xi carried per arc
  std::map<Arc, Energy> dissipated_per_arc;     // black arcs only
  std::map<VertexId, Energy> capacitated_per_sink;
  std::vector<long long> resting_mass;          // [v-1], non-sinks only
  Energy total_black_energy;
  Energy total_capacitated;
};

/// Minimum directed distance from any source; 0 for sources. Finite for
/// every vertex of a valid energy graph.
std::vector<int> levels(const EnergyGraph& g);

std::vector<ArrivalString> arrival_strings(const EnergyGraph& g);

/// Arcs (u, v) with level(u) + 1 > level(v): the in-arcs not on any
/// minimum directed-distance path from a source.
std::vector<Arc> black_arcs_by_arrival(const EnergyGraph& g);

/// Exhaustive propagation with exact symbolic accounting. Each source
/// receives 1 xi; a vertex's kinetic pool divides equally over its
/// out-arcs; late arrivals dissipate their kinetic energy plus mc^2;
/// first arrivals merge, collide and rest at the vertex.
PropagationReport propagate(const EnergyGraph& g);

Energy total_black_energy(const EnergyGraph& g);

/// Exact check: black + capacitated == (#sources) xi + |A| mc^2.
bool check_conservation(const PropagationReport& report,
                        const EnergyGraph& g);

}  // namespace energygraph
