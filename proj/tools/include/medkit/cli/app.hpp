#pragma once

#include <string>
#include <vector>

namespace medkit::cli {

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

struct Outcome {
  int exit_code = kExitOk;
  std::string out;  ///< report text, empty when written to --out
  std::string err;  ///< diagnostics and warnings
};

std::vector<std::string> command_names();

/// Runs one invocation; `args` excludes the program name. Never throws.
Outcome run(const std::vector<std::string>& args);

}  // namespace medkit::cli
