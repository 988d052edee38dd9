#include "medkit/cli/report.hpp"

#include <cstdio>
#include <sstream>

namespace medkit::cli {

void Report::check(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
}

void Report::skip(std::string name, std::string reason) {
  checks.push_back({std::move(name), CheckStatus::Skipped, "oracle skipped: " + reason});
}

bool Report::passed() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) return false;
  }
  return true;
}

std::string_view to_string(CheckStatus status) noexcept {
  switch (status) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "unknown";
}

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["input"] = input;
  j["digest"] = digest;
  j["results"] = results;
  Json cs = Json::array();
  for (const auto& c : checks) {
    Json e;
    e["name"] = c.name;
    e["status"] = std::string(to_string(c.status));
    if (!c.detail.empty()) e["detail"] = c.detail;
    cs.push_back(std::move(e));
  }
  j["checks"] = std::move(cs);
  j["warnings"] = warnings;
  j["status"] = passed() ? "ok" : "failed";
  if (seconds) j["seconds"] = *seconds;
  return j;
}

namespace {

void text_value(std::ostringstream& out, const Json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (value.is_object()) {
    for (const auto& [key, v] : value.items()) {
      if (v.is_object() && !v.empty()) {
        out << pad << key << ":\n";
        text_value(out, v, indent + 2);
      } else {
        out << pad << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
    return;
  }
  out << pad << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
}

}  // namespace

std::string Report::to_text() const {
  std::ostringstream out;
  out << "command: " << command << "\n";
  out << "input: " << input << "\n";
  out << "digest: " << digest << "\n";
  out << "results:\n";
  text_value(out, results, 2);
  out << "checks:\n";
  for (const auto& c : checks) {
    out << "  " << (c.status == CheckStatus::Pass ? "PASS" : c.status == CheckStatus::Fail ? "FAIL" : "SKIP") << " "
        << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  for (const auto& w : warnings) out << "warning: " << w << "\n";
  out << "status: " << (passed() ? "ok" : "failed") << "\n";
  if (seconds) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", *seconds);
    out << "seconds: " << buf << "\n";
  }
  return out.str();
}

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string fnv1a_hex(std::string_view data) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(data)));
  return buf;
}

}  // namespace medkit::cli
