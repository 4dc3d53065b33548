#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "energygraph/blackarc.hpp"
#include "energygraph/blocks.hpp"
#include "energygraph/fixtures.hpp"
#include "energygraph/graph.hpp"
#include "energygraph/json_io.hpp"
#include "energygraph/propagation.hpp"
#include "energygraph/sequences.hpp"

namespace eg = energygraph;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

eg::EnergyGraph load_graph(const std::string& path) {
  return eg::graph_from_json(eg::parse_json_text(read_file(path)));
}

std::string vertex_list(const std::vector<eg::VertexId>& vs) {
  std::string out;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += "u" + std::to_string(vs[i]);
  }
  return out;
}

int cmd_gen(const std::string& seq, int n, const std::string& out_path) {
  auto spec = eg::parse_sequence_spec(seq);
  auto g = eg::jaco_graph(spec, n);
  write_file(out_path, eg::graph_to_json(g).dump(2) + "\n");
  std::cout << "n=" << g.n << " arcs=" << g.arcs.size()
            << " sources=" << vertex_list(eg::sources(g))
            << " sinks=" << vertex_list(eg::sinks(g)) << "\n";
  return 0;
}

int cmd_propagate(const std::string& in_path, const std::string& report_path) {
  auto g = load_graph(in_path);
  auto validation = eg::validate(g);
  if (!validation.ok()) {
    for (const auto& v : validation.violations)
      std::cerr << "invalid graph: " << v << "\n";
    return 1;
  }
  auto report = eg::propagate(g);
  write_file(report_path, eg::report_to_json(report).dump(2) + "\n");
  std::cout << "black_arcs=" << report.black_arcs.size()
            << " dissipated=" << eg::energy_to_string(report.total_black_energy)
            << " capacitated="
            << eg::energy_to_string(report.total_capacitated)
            << " conserved="
            << (eg::check_conservation(report, g) ? "yes" : "no") << "\n";
  return 0;
}

int cmd_blackarc(const std::string& in_path, const std::string& report_path) {
  auto g = load_graph(in_path);
  auto result = eg::jaco_black_arc_algorithm(g);
  auto arrival = eg::black_arcs_by_arrival(g);
  json j;
  json steps = json::array();
  for (const auto& step : result.cloud.steps) {
    json arcs = json::array();
    for (const auto& [u, v] : step) arcs.push_back({u, v});
    steps.push_back(std::move(arcs));
  }
  j["cloud_steps"] = std::move(steps);
  json cumulative = json::array();
  for (const auto& [u, v] : result.cloud.cumulative)
    cumulative.push_back({u, v});
  j["black_cloud"] = std::move(cumulative);
  j["b_count"] = result.b_count;
  j["solid_subgraph"] = eg::graph_to_json(result.solid.graph);
  json arr = json::array();
  for (const auto& [u, v] : arrival) arr.push_back({u, v});
  j["black_arcs_by_arrival"] = std::move(arr);
  j["detectors_agree"] = result.cloud.cumulative == arrival;
  write_file(report_path, j.dump(2) + "\n");
  std::cout << "b_count=" << result.b_count
            << " solid_arcs=" << result.solid.graph.arcs.size()
            << " detectors_agree="
            << (result.cloud.cumulative == arrival ? "yes" : "no") << "\n";
  return 0;
}

int cmd_table(const std::string& seq, int from, int to,
              const std::string& out_path) {
  auto spec = eg::parse_sequence_spec(seq);
  std::ostringstream csv;
  csv << "n,b_count\n";
  for (int n = from; n <= to; ++n) {
    auto g = eg::jaco_graph(spec, n);
    csv << n << "," << eg::jaco_black_arc_algorithm(g).b_count << "\n";
  }
  if (out_path.empty())
    std::cout << csv.str();
  else
    write_file(out_path, csv.str());
  return 0;
}

int cmd_min_orient(const std::string& in_path, int guard) {
  auto g =
      eg::undirected_from_json(eg::parse_json_text(read_file(in_path)));
  std::cout << "b_min=" << eg::black_arc_number_min(g, guard) << "\n";
  return 0;
}

int cmd_decompose(const std::string& in_path) {
  auto g = load_graph(in_path);
  auto blocks = eg::arc_partition_blocks(g);
  long long sum = eg::decompose_and_sum(g);
  std::cout << "blocks=" << blocks.size();
  for (size_t i = 0; i < blocks.size(); ++i)
    std::cout << " |A" << i + 1 << "|=" << blocks[i].size();
  std::cout << " block_black_sum=" << sum
            << " whole_graph_black=" << eg::black_arcs_by_arrival(g).size()
            << "\n";
  return 0;
}

int cmd_dot(const std::string& in_path, const std::string& out_path) {
  write_file(out_path, eg::to_dot(load_graph(in_path)));
  return 0;
}

int cmd_fixtures(bool inject_fault) {
  auto results = eg::run_fixture_suite({inject_fault});
  int warns = 0, fails = 0;
  for (const auto& r : results) {
    std::cout << eg::fixture_status_name(r.status) << " " << r.id;
    if (!r.detail.empty()) std::cout << ": " << r.detail;
    std::cout << "\n";
    if (r.status == eg::FixtureStatus::warn) ++warns;
    if (r.status == eg::FixtureStatus::fail) ++fails;
  }
  std::cout << results.size() << " fixtures, " << fails << " failed, "
            << warns << " known-discrepancy warnings\n";
  return fails == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"energy graph construction, propagation and black-arc analysis"};
  app.require_subcommand(1);

  std::string seq, in_path, out_path, report_path;
  int n = 0, from = 0, to = 0, guard = 10;
  bool inject_fault = false;

  auto* gen = app.add_subcommand("gen", "generate a Jaco-type graph");
  gen->add_option("--seq", seq,
                  "sequence spec: \"s1\" | \"fib\" | \"mod:<k>\" | "
                  "\"list:<a1,a2,...>\"")
      ->required();
  gen->add_option("--n", n, "vertex count")->required()->check(CLI::PositiveNumber);
  gen->add_option("--out", out_path, "output graph JSON")->required();

  auto* prop = app.add_subcommand("propagate", "run the energy propagation");
  prop->add_option("--in", in_path, "input graph JSON")->required();
  prop->add_option("--report", report_path, "output report JSON")->required();

  auto* black = app.add_subcommand("blackarc", "black cloud and solid subgraph");
  black->add_option("--in", in_path, "input graph JSON")->required();
  black->add_option("--report", report_path, "output report JSON")->required();

  auto* table = app.add_subcommand("table", "b-count sweep as CSV");
  table->add_option("--seq", seq, "sequence spec")->required();
  table->add_option("--from", from, "first n")->required();
  table->add_option("--to", to, "last n")->required();
  table->add_option("--out", out_path, "output CSV (default stdout)");

  auto* minor = app.add_subcommand(
      "min-orient", "minimum black arcs over all acyclic orientations");
  minor->add_option("--in", in_path, "input undirected graph JSON")->required();
  minor->add_option("--guard", guard, "vertex-count guard (default 10)");

  auto* dec = app.add_subcommand("decompose", "arc-partition block analysis");
  dec->add_option("--in", in_path, "input graph JSON")->required();

  auto* dot = app.add_subcommand("dot", "render to Graphviz DOT");
  dot->add_option("--in", in_path, "input graph JSON")->required();
  dot->add_option("--out", out_path, "output DOT file")->required();

  auto* fix = app.add_subcommand("fixtures", "run the reproduction suite");
  fix->add_flag("--inject-fault", inject_fault,
                "deliberately corrupt one value (harness sanity check)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(seq, n, out_path);
    if (prop->parsed()) return cmd_propagate(in_path, report_path);
    if (black->parsed()) return cmd_blackarc(in_path, report_path);
    if (table->parsed()) {
      if (from > to) {
        std::cerr << "--from must not exceed --to\n";
        return 1;
      }
      return cmd_table(seq, from, to, out_path);
    }
    if (minor->parsed()) return cmd_min_orient(in_path, guard);
    if (dec->parsed()) return cmd_decompose(in_path);
    if (dot->parsed()) return cmd_dot(in_path, out_path);
    if (fix->parsed()) return cmd_fixtures(inject_fault);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
