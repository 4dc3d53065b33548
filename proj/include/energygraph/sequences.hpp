#pragma once

#include <string>
#include <vector>

#include "energygraph/graph.hpp"

namespace energygraph {

enum class SequenceKind { natural, fibonacci, mod_k, explicit_list };

/// Generator of the non-negative integer sequence {a_i} that drives
/// Jaco-type graph construction.
struct SequenceSpec {
  SequenceKind kind = SequenceKind::natural;
  int k = 0;                      // modulus, mod_k only
  std::vector<long long> terms;   // explicit_list only

  static SequenceSpec natural();
  static SequenceSpec fibonacci();
  static SequenceSpec mod(int k);
  static SequenceSpec list(std::vector<long long> terms);
};

/// a_i for the spec: natural -> i, fibonacci -> f_i (f_1 = f_2 = 1),
/// mod-k -> i mod k, explicit list -> terms[i-1].
/// Throws std::out_of_range for an explicit-list index past the end.
long long sequence_term(const SequenceSpec& spec, int i);

/// CLI grammar: "s1" | "fib" | "mod:<k>" | "list:<a1,a2,...>".
SequenceSpec parse_sequence_spec(const std::string& text);
std::string to_string(const SequenceSpec& spec);

/// Jaco-type graph J_n({a_i}): arc (i, j) iff i < j <= i + a_i.
EnergyGraph jaco_graph(const SequenceSpec& spec, int n);

/// Code table: 2^bit_width rows whose decimal values run 0,1,...,2^n - 1.
struct CodeTable {
  int bit_width = 0;
  std::vector<std::string> rows;     // bit strings
  std::vector<long long> values;     // decimal value of each row
};

CodeTable binary_code_table(int bit_width);

/// Standard reflected Gray code; row i still decodes to i - 1.
CodeTable gray_code_table(int bit_width);

std::string code_table_csv(const CodeTable& table);

/// Graphical embodiment of a width-n code on 2^(n+1) vertices:
/// d+(u_i) = value_i + 1 for the first half, then decreasing to 0, each
/// vertex's arcs going to the immediately following vertices.
EnergyGraph binary_code_graph(int bit_width);

/// Same construction driven by an explicit code table (the graph depends
/// only on the row -> decimal mapping, so Gray tables give the same
/// graph as binary ones).
EnergyGraph code_table_graph(const CodeTable& table);

/// Disjoint union of t copies; copy i's vertex j becomes (i-1)*n + j.
EnergyGraph union_copies(const EnergyGraph& g, int t);

}  // namespace energygraph
