#pragma once

#include "medkit/cli/report.hpp"
#include "medkit/corpus.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace medkit::cli {

struct SweepInstance {
  std::string label;
  Generated input;
  bool negative_control = false;
};

/// Structured default corpus: every generator with fixed parameters.
std::vector<SweepInstance> default_sweep_corpus();

/// Property suites in run order, followed by "all".
std::vector<std::string> suite_names();

struct SuiteOutcome {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;  ///< first few failures
  std::vector<std::string> skipped;          ///< oracles not run, with reasons
  std::vector<std::string> notes;
};

/// Runs one named suite (not "all") on one instance. Randomness is seeded from
/// the instance label and suite name, so results do not depend on scheduling.
SuiteOutcome run_suite(const std::string& suite, const SweepInstance& instance);

/// Fans instances out over `workers` threads and merges in instance order.
Report sweep(const std::vector<SweepInstance>& corpus, const std::string& suite, unsigned workers);

}  // namespace medkit::cli
