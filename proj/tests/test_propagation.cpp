#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "energygraph/graph.hpp"
#include "energygraph/orientation.hpp"
#include "energygraph/propagation.hpp"
#include "energygraph/sequences.hpp"
#include "test_util.hpp"

using namespace energygraph;

namespace {

EnergyGraph canonical_cycle(int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(1, n);
  return orient_topologically(make_undirected(n, std::move(edges)), {1});
}

EnergyGraph directed_path(int n) {
  std::vector<Arc> arcs;
  for (int v = 1; v < n; ++v) arcs.emplace_back(v, v + 1);
  return make_graph(n, std::move(arcs));
}

}  // namespace

TEST_CASE("levels of J8(s1)") {
  auto g = jaco_graph(SequenceSpec::natural(), 8);
  CHECK(levels(g) == std::vector<int>{0, 1, 2, 2, 3, 3, 3, 3});
}

TEST_CASE("levels of a directed path") {
  CHECK(levels(directed_path(4)) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("levels with two sources") {
  // two-source star: centre reached at time 1 from either source
  auto g = make_graph(3, {{1, 3}, {2, 3}});
  CHECK(levels(g) == std::vector<int>{0, 0, 1});
}

TEST_CASE("arrival strings of J8(s1)") {
  auto strings = arrival_strings(jaco_graph(SequenceSpec::natural(), 8));
  CHECK(strings[0].times == std::vector<int>{0});
  CHECK(strings[3].times == std::vector<int>{2, 3});
  CHECK(strings[5].times == std::vector<int>{3, 3, 4});
  CHECK(strings[7].times == std::vector<int>{3, 4, 4, 4});
}

TEST_CASE("arrival strings of J12(s2)") {
  auto strings = arrival_strings(jaco_graph(SequenceSpec::fibonacci(), 12));
  CHECK(strings[11].times == std::vector<int>{5, 5, 5, 5, 5, 6});
}

TEST_CASE("arrival string of a single arc") {
  auto strings = arrival_strings(make_graph(2, {{1, 2}}));
  CHECK(strings[1].times == std::vector<int>{1});
}

TEST_CASE("black arcs of J8(s1)") {
  auto black = black_arcs_by_arrival(jaco_graph(SequenceSpec::natural(), 8));
  CHECK(black == std::vector<Arc>{{3, 4}, {5, 6}, {5, 7}, {5, 8}, {6, 7},
                                  {6, 8}, {7, 8}});
}

TEST_CASE("paths have no black arcs") {
  for (int n = 2; n <= 10; ++n)
    CHECK(black_arcs_by_arrival(directed_path(n)).empty());
}

TEST_CASE("canonically oriented odd cycle has one black arc") {
  CHECK(black_arcs_by_arrival(canonical_cycle(5)) ==
        std::vector<Arc>{{4, 5}});
  CHECK(black_arcs_by_arrival(canonical_cycle(6)).empty());
}

TEST_CASE("J8(s1) energy ledger") {
  auto report = propagate(jaco_graph(SequenceSpec::natural(), 8));
  CHECK(report.dissipated_per_arc.at({3, 4}) == Energy{Rational(1, 6), 1});
  CHECK(report.dissipated_per_arc.at({5, 6}) == Energy{Rational(7, 72), 1});
  Energy at7 =
      report.dissipated_per_arc.at({5, 7}) + report.dissipated_per_arc.at({6, 7});
  CHECK(at7 == Energy{Rational(7, 72) + Rational(7, 48), 2});
  Energy at8 = report.dissipated_per_arc.at({5, 8}) +
               report.dissipated_per_arc.at({6, 8}) +
               report.dissipated_per_arc.at({7, 8});
  CHECK(at8 == Energy{Rational(7, 72) + Rational(7, 48) + Rational(1, 8), 3});
  CHECK(report.capacitated_per_sink.at(8) == Energy{Rational(1, 8), 1});
  CHECK(report.total_black_energy == Energy{Rational(7, 8), 7});
  CHECK(report.total_capacitated == Energy{Rational(1, 8), 9});
  CHECK(check_conservation(report, jaco_graph(SequenceSpec::natural(), 8)));
}

TEST_CASE("path capacitates the whole quantum at its sink") {
  for (int n : {2, 5, 9}) {
    auto g = directed_path(n);
    auto report = propagate(g);
    CHECK(report.total_black_energy == Energy{});
    CHECK(report.capacitated_per_sink.at(n) == Energy{Rational(1), 1});
  }
}

TEST_CASE("J12(s3) sink capacitation, k=5") {
  auto report = propagate(jaco_graph(SequenceSpec::mod(5), 12));
  CHECK(report.capacitated_per_sink.at(5) == Energy{Rational(7, 24), 2});
  CHECK(report.capacitated_per_sink.at(10) == Energy{Rational(1, 24), 1});
  // u12 and the dissipation total: oracle-derived, see test_oracle.cpp
  CHECK(report.capacitated_per_sink.at(12).mass_units == 2);
  CHECK(report.total_black_energy.mass_units == 5);
}

TEST_CASE("cycle energies") {
  CHECK(total_black_energy(canonical_cycle(6)) == Energy{});
  CHECK(total_black_energy(canonical_cycle(5)) ==
        Energy{Rational(1, 2), 1});
}

TEST_CASE("star energy is zero under every acyclic orientation") {
  std::vector<Edge> edges;
  for (int v = 2; v <= 5; ++v) edges.emplace_back(1, v);
  auto star = make_undirected(5, edges);
  for (const auto& g : enumerate_acyclic_orientations(star))
    CHECK(total_black_energy(g) == Energy{});
}

TEST_CASE("total black energy is zero iff no black arcs") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = testutil::random_energy_graph(10, rng);
    if (g.arcs.empty()) continue;
    CHECK((total_black_energy(g) == Energy{}) ==
          black_arcs_by_arrival(g).empty());
  }
}

TEST_CASE("conservation and the mass ledger on random graphs") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    auto g = trial % 2 ? testutil::random_energy_graph(14, rng)
                       : testutil::random_jaco(20, rng);
    if (g.arcs.empty()) continue;
    auto report = propagate(g);
    CHECK(check_conservation(report, g));
    auto black = black_arcs_by_arrival(g);
    CHECK(report.total_black_energy.mass_units ==
          static_cast<long long>(black.size()));
    CHECK(report.total_capacitated.mass_units ==
          static_cast<long long>(g.arcs.size() - black.size()));
  }
}

TEST_CASE("level step is exactly one along non-black arcs") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = testutil::random_jaco(25, rng);
    auto lvl = levels(g);
    auto black = black_arcs_by_arrival(g);
    for (const auto& arc : g.arcs) {
      bool is_black = std::binary_search(black.begin(), black.end(), arc);
      if (is_black)
        CHECK(lvl[arc.second - 1] < lvl[arc.first - 1] + 1);
      else
        CHECK(lvl[arc.second - 1] == lvl[arc.first - 1] + 1);
    }
  }
}

TEST_CASE("black in-arc count equals d- minus min-arrival multiplicity") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = testutil::random_energy_graph(12, rng);
    auto black = black_arcs_by_arrival(g);
    auto strings = arrival_strings(g);
    auto ind = in_degrees(g);
    std::map<VertexId, int> black_in;
    for (const auto& [u, v] : black) ++black_in[v];
    for (VertexId v = 1; v <= g.n; ++v) {
      if (ind[v - 1] == 0) continue;
      const auto& times = strings[v - 1].times;
      long long min_mult =
          std::count(times.begin(), times.end(), times.front());
      CHECK(black_in[v] == ind[v - 1] - min_mult);
    }
  }
}

TEST_CASE("pool is positive at every vertex") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = testutil::random_energy_graph(12, rng);
    if (g.arcs.empty()) continue;
    auto report = propagate(g);
    for (VertexId v = 1; v <= g.n; ++v) CHECK(report.pool[v - 1] > 0);
  }
}

TEST_CASE("energy formatting") {
  CHECK(energy_to_string(Energy{Rational(7, 8), 7}) == "7/8 xi + 7 mc2");
  CHECK(energy_to_string(Energy{}) == "0 xi + 0 mc2");
  CHECK(energy_to_string(Energy{Rational(1), 1}) == "1 xi + 1 mc2");
}
