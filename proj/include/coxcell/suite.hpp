#pragma once

#include "coxcell/oracle.hpp"
#include "coxcell/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace coxcell {

/// One property-check result.  A failing report always carries a minimal
/// reproducing input in `counterexample`.
struct OracleReport {
  std::string group;
  std::string check;
  bool pass = false;
  uint64_t seed = 0;
  std::string counterexample;
};

struct SuiteOptions {
  uint64_t seed = 3084217046u;  // fixed default, overridable, recorded in reports
  /// "" for none; "gamma" corrupts one gamma entry before running, which
  /// must make the P7 check fail.
  std::string inject_fault;
};

/// Run every exhaustive/sampled invariant check against a built group.
/// Checks are deterministic given the seed (each check derives its own
/// stream from seed and check name, so the set of checks can change
/// without perturbing others).  Reports come back sorted by check name.
std::vector<OracleReport> run_property_suite(const CoxeterSystem& W, const HeckeAlgebra& H,
                                             const CellDecomposition& cells, GammaTable& g,
                                             const SuiteOptions& opt = {});

bool all_pass(const std::vector<OracleReport>& reports);
json suite_report_json(const std::vector<OracleReport>& reports);

}  // namespace coxcell
