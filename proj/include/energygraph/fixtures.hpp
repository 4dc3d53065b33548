#pragma once

#include <string>
#include <vector>

namespace energygraph {

enum class FixtureStatus { pass, warn, fail };

struct FixtureResult {
  std::string id;
  FixtureStatus status = FixtureStatus::fail;
  std::string detail;  // on warn/fail: published value vs computed value
};

struct FixtureOptions {
  // Deliberately corrupts one computed value so the harness itself can
  // be checked to report failure.
  bool inject_fault = false;
};

/// Runs the whole reproduction suite of published desk-scale results:
/// arrival strings, energy ledgers, black clouds, the mod-5 table, the
/// mod-4 closed form and family results. Published figures known to be
/// internally inconsistent are reported as warn with both values.
std::vector<FixtureResult> run_fixture_suite(const FixtureOptions& opts = {});

/// True iff no result has status fail.
bool fixtures_passed(const std::vector<FixtureResult>& results);

std::string fixture_status_name(FixtureStatus s);

// Published reference data used by the fixture suite and the acceptance
// tests.
namespace reference {

/// b-values of the mod-5 family for n = 4..35 as published (32 entries).
const std::vector<int>& mod5_table();

/// Published black cloud of the mod-5 graph J_n, n = 4..35.
const std::vector<std::vector<std::pair<int, int>>>& mod5_clouds();

/// n values (4..35) whose published mod-5 table entry contradicts the
/// published cloud or the arrival-time detector.
const std::vector<int>& mod5_table_discrepancies();

/// n values whose published mod-5 cloud differs from the computed one.
const std::vector<int>& mod5_cloud_discrepancies();

}  // namespace reference

}  // namespace energygraph
