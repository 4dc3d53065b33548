#include <doctest.h>

#include <nlohmann/json.hpp>
#include <random>
#include <stdexcept>
#include <string>

#include "energygraph/json_io.hpp"
#include "energygraph/propagation.hpp"
#include "energygraph/rational.hpp"
#include "energygraph/sequences.hpp"
#include "test_util.hpp"

using namespace energygraph;
using nlohmann::json;

namespace {

size_t count_substr(const std::string& text, const std::string& needle) {
  size_t count = 0;
  for (size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++count;
  return count;
}

}  // namespace

TEST_CASE("rational text forms") {
  CHECK(rational_to_string(Rational(7, 72)) == "7/72");
  CHECK(rational_to_string(Rational(4, 2)) == "2");
  CHECK(rational_to_string(Rational(0)) == "0");
  CHECK(parse_rational("7/72") == Rational(7, 72));
  CHECK(parse_rational("-3/9") == Rational(-1, 3));
  CHECK(parse_rational("5") == Rational(5));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("graph JSON round trip") {
  auto g = jaco_graph(SequenceSpec::fibonacci(), 12);
  CHECK(graph_from_json(graph_to_json(g)) == g);

  auto j = graph_to_json(jaco_graph(SequenceSpec::natural(), 3));
  CHECK(j["n"] == 3);
  CHECK(j["arcs"] == json::array({{1, 2}, {2, 3}}));
}

TEST_CASE("graph JSON round trip on random graphs") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = testutil::random_energy_graph(10, rng);
    CHECK(graph_from_json(graph_to_json(g)) == g);
  }
}

TEST_CASE("undirected JSON round trip") {
  auto u = make_undirected(4, {{1, 2}, {2, 3}, {1, 4}});
  auto back = undirected_from_json(undirected_to_json(u));
  CHECK(back.n == u.n);
  CHECK(back.edges == u.edges);
}

TEST_CASE("malformed graph JSON is rejected") {
  CHECK_THROWS_AS(graph_from_json(json::array()), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(json{{"n", 2}}), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(json{{"n", 2}, {"arcs", {{1, 2, 3}}}}),
                  std::invalid_argument);
}

TEST_CASE("energies serialize as exact strings") {
  Energy e{Rational(7, 72), 1};
  auto j = energy_to_json(e);
  CHECK(j["xi"].is_string());
  CHECK(j["xi"] == "7/72");
  CHECK(j["mc2"] == 1);
  CHECK(energy_from_json(j) == e);
}

TEST_CASE("report JSON carries the full ledger") {
  auto g = jaco_graph(SequenceSpec::natural(), 8);
  auto j = report_to_json(propagate(g));
  CHECK(j["levels"] == json::array({0, 1, 2, 2, 3, 3, 3, 3}));
  CHECK(j["black_arcs"].size() == 7);
  CHECK(j["total_black_energy"]["xi"] == "7/8");
  CHECK(j["total_black_energy"]["mc2"] == 7);
  CHECK(j["total_capacitated"]["xi"] == "1/8");
  CHECK(j["total_capacitated"]["mc2"] == 9);
  CHECK(j["capacitated_per_sink"]["8"]["xi"] == "1/8");
  CHECK(j["arrival_strings"]["6"] == json::array({3, 3, 4}));
  // exact strings only, no floats anywhere in energy values
  for (const auto& entry : j["dissipated_per_arc"])
    CHECK(entry["energy"]["xi"].is_string());
}

TEST_CASE("JSON parse errors carry line information") {
  try {
    parse_json_text("{\n  \"n\": 2,\n  \"arcs\": [[1,2]\n}");
    CHECK(false);
  } catch (const std::runtime_error& err) {
    CHECK(std::string(err.what()).find("line") != std::string::npos);
  }
}

TEST_CASE("DOT output dashes exactly the black arcs") {
  auto dot8 = to_dot(jaco_graph(SequenceSpec::natural(), 8));
  CHECK(count_substr(dot8, "style=dashed") == 7);
  CHECK(dot8.find("u6 [label=\"u6 ~ <3,3,4>\"]") != std::string::npos);
  CHECK(dot8.find("1/6 xi + 1 mc2") != std::string::npos);

  auto p4 = make_graph(4, {{1, 2}, {2, 3}, {3, 4}});
  CHECK(count_substr(to_dot(p4), "style=dashed") == 0);

  auto dot_mod5 = to_dot(jaco_graph(SequenceSpec::mod(5), 12));
  CHECK(count_substr(dot_mod5, "style=dashed") == 5);
}
