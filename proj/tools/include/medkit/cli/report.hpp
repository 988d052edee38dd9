#pragma once

#include "medkit/io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace medkit::cli {

enum class CheckStatus { Pass, Fail, Skipped };

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

/// Outcome of one command. Field order in the emitted forms is fixed; timing
/// is only present when requested so default output is byte-stable.
struct Report {
  std::string command;
  std::string input;
  std::string digest;
  Json results = Json::object();
  std::vector<Check> checks;
  std::vector<std::string> warnings;
  std::optional<double> seconds;

  void check(std::string name, bool pass, std::string detail = {});
  /// Records a brute-force oracle that was not run, with the reason.
  void skip(std::string name, std::string reason);
  void warn(std::string message) { warnings.push_back(std::move(message)); }
  bool passed() const;

  Json to_json() const;
  std::string to_text() const;
};

std::string_view to_string(CheckStatus status) noexcept;

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view data);
/// fnv1a as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view data);

}  // namespace medkit::cli
