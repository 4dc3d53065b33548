#include "energygraph/sequences.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace energygraph {

SequenceSpec SequenceSpec::natural() { return {SequenceKind::natural}; }
SequenceSpec SequenceSpec::fibonacci() { return {SequenceKind::fibonacci}; }

SequenceSpec SequenceSpec::mod(int k) {
  if (k < 1) throw std::invalid_argument("mod sequence needs k >= 1");
  SequenceSpec spec{SequenceKind::mod_k};
  spec.k = k;
  return spec;
}

SequenceSpec SequenceSpec::list(std::vector<long long> terms) {
  for (long long a : terms)
    if (a < 0)
      throw std::invalid_argument("sequence terms must be non-negative");
  SequenceSpec spec{SequenceKind::explicit_list};
  spec.terms = std::move(terms);
  return spec;
}

long long sequence_term(const SequenceSpec& spec, int i) {
  if (i < 1) throw std::out_of_range("sequence index must be positive");
  switch (spec.kind) {
    case SequenceKind::natural:
      return i;
    case SequenceKind::fibonacci: {
      // f_1 = f_2 = 1, f_3 = 2, ...
      long long a = 0, b = 1;
      for (int step = 1; step < i; ++step) {
        long long next = a + b;
        a = b;
        b = next;
      }
      return b;
    }
    case SequenceKind::mod_k:
      return i % spec.k;
    case SequenceKind::explicit_list:
      if (static_cast<size_t>(i) > spec.terms.size())
        throw std::out_of_range("explicit sequence has no term " +
                                std::to_string(i));
      return spec.terms[i - 1];
  }
  throw std::logic_error("unreachable");
}

SequenceSpec parse_sequence_spec(const std::string& text) {
  if (text == "s1") return SequenceSpec::natural();
  if (text == "fib") return SequenceSpec::fibonacci();
  if (text.rfind("mod:", 0) == 0) {
    int k = 0;
    try {
      size_t used = 0;
      k = std::stoi(text.substr(4), &used);
      if (used != text.size() - 4) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad modulus in sequence spec: " + text);
    }
    return SequenceSpec::mod(k);
  }
  if (text.rfind("list:", 0) == 0) {
    std::vector<long long> terms;
    std::stringstream ss(text.substr(5));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        size_t used = 0;
        terms.push_back(std::stoll(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad term in sequence spec: " + text);
      }
    }
    if (terms.empty())
      throw std::invalid_argument("empty term list in sequence spec");
    return SequenceSpec::list(std::move(terms));
  }
  throw std::invalid_argument(
      "unparseable sequence spec '" + text +
      "' (expected \"s1\" | \"fib\" | \"mod:<k>\" | \"list:<a1,a2,...>\")");
}

std::string to_string(const SequenceSpec& spec) {
  switch (spec.kind) {
    case SequenceKind::natural:
      return "s1";
    case SequenceKind::fibonacci:
      return "fib";
    case SequenceKind::mod_k:
      return "mod:" + std::to_string(spec.k);
    case SequenceKind::explicit_list: {
      std::string out = "list:";
      for (size_t i = 0; i < spec.terms.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(spec.terms[i]);
      }
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

EnergyGraph jaco_graph(const SequenceSpec& spec, int n) {
  if (n < 1) throw std::invalid_argument("jaco_graph needs n >= 1");
  std::vector<Arc> arcs;
  for (int i = 1; i <= n; ++i) {
    long long reach = std::min<long long>(i + sequence_term(spec, i), n);
    for (int j = i + 1; j <= reach; ++j) arcs.emplace_back(i, j);
  }
  return make_graph(n, std::move(arcs));
}

CodeTable binary_code_table(int bit_width) {
  if (bit_width < 1) throw std::invalid_argument("bit width must be >= 1");
  CodeTable table{bit_width};
  long long rows = 1LL << bit_width;
  for (long long value = 0; value < rows; ++value) {
    std::string bits(bit_width, '0');
    for (int b = 0; b < bit_width; ++b)
      if (value >> (bit_width - 1 - b) & 1) bits[b] = '1';
    table.rows.push_back(bits);
    table.values.push_back(value);
  }
  return table;
}

CodeTable gray_code_table(int bit_width) {
  if (bit_width < 1) throw std::invalid_argument("bit width must be >= 1");
  CodeTable table{bit_width};
  long long rows = 1LL << bit_width;
  for (long long value = 0; value < rows; ++value) {
    long long gray = value ^ (value >> 1);
    std::string bits(bit_width, '0');
    for (int b = 0; b < bit_width; ++b)
      if (gray >> (bit_width - 1 - b) & 1) bits[b] = '1';
    table.rows.push_back(bits);
    table.values.push_back(value);  // position in the code sequence
  }
  return table;
}

std::string code_table_csv(const CodeTable& table) {
  std::string out = "bits,decimal\n";
  for (size_t i = 0; i < table.rows.size(); ++i)
    out += table.rows[i] + "," + std::to_string(table.values[i]) + "\n";
  return out;
}

EnergyGraph code_table_graph(const CodeTable& table) {
  // 2^(n+1) vertices; the first 2^n out-degrees are value_i + 1, then
  // they count down to 0. Arcs go to the immediately following vertices.
  long long half = static_cast<long long>(table.rows.size());
  long long total = 2 * half;
  std::vector<Arc> arcs;
  for (long long i = 1; i <= total; ++i) {
    long long deg =
        i <= half ? table.values[i - 1] + 1 : half - (i - half);
    long long reach = std::min(i + deg, total);
    for (long long j = i + 1; j <= reach; ++j)
      arcs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  return make_graph(static_cast<int>(total), std::move(arcs));
}

EnergyGraph binary_code_graph(int bit_width) {
  return code_table_graph(binary_code_table(bit_width));
}

EnergyGraph union_copies(const EnergyGraph& g, int t) {
  if (t < 1) throw std::invalid_argument("union_copies needs t >= 1");
  std::vector<Arc> arcs;
  arcs.reserve(g.arcs.size() * t);
  for (int copy = 0; copy < t; ++copy) {
    int offset = copy * g.n;
    for (const auto& [i, j] : g.arcs) arcs.emplace_back(i + offset, j + offset);
  }
  return make_graph(g.n * t, std::move(arcs));
}

}  // namespace energygraph
