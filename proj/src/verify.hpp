#pragma once

#include <string>
#include <vector>

#include "group.hpp"
#include "statesum.hpp"

namespace gtpa {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string counterexample;  // empty when the check passes
};

struct SuiteReport {
  std::string suite;
  int max_n = 0;
  unsigned seed = 0;
  bool pass = true;
  std::vector<CheckResult> checks;
};

// Suites the CLI accepts, in dispatch order; "all" expands to every entry.
const std::vector<std::string>& suite_names();

// Run one named suite. max_n bounds the highest level any check touches;
// seed drives the deterministic subsampling of oversized basis sweeps.
SuiteReport run_suite(const GroupContext& ctx, const std::string& suite, int max_n,
                      unsigned seed);

// All sixteen sign tables for the critical-point weights, filtered by the
// calibration constraints: wiggles cancel, closed loops of both shadings
// evaluate to delta, structural tangles reproduce their word formulas.
std::vector<CriticalWeights> calibration_search(const GroupContext& ctx);

}  // namespace gtpa
