#pragma once
#include <string>
#include <utility>
#include <vector>

namespace gradus {

inline constexpr const char* kEngineVersion = "gradus 1.0.0";

/* One executed check. `values` holds the computed quantities (dimensions,
   probe outcomes, witnesses) as ordered key/value strings. wall_ms appears
   in the table rendering only: the JSON document must be reproducible
   byte-for-byte across reruns, so volatile timings stay out of it. */
struct CheckResult {
  std::string name;
  std::string verdict;  // "pass" | "fail" | "vacuous" | "error"
  std::string detail;
  std::vector<std::pair<std::string, std::string>> values;
  long wall_ms = 0;
};

struct Report {
  std::string title;
  std::string engine = kEngineVersion;
  std::string field = "rationals";
  unsigned long long seed = 0;
  std::vector<std::pair<std::string, std::string>> settings;
  std::vector<CheckResult> checks;

  int count(const char* verdict) const;
  int passed() const { return count("pass"); }
  int failed() const { return count("fail"); }
  int vacuous() const { return count("vacuous"); }
  int errors() const { return count("error"); }
  bool ok() const { return failed() == 0 && errors() == 0; }
  // 0 all good (vacuous allowed), 1 violation, 2 engine error
  int exit_code() const;

  const std::string* setting(const std::string& key) const;
  void set(const std::string& key, const std::string& value);

  std::string json() const;   // deterministic; excludes wall-clock times
  std::string table() const;  // human-readable; includes wall-clock times
};

// re-render a JSON report document as the human-readable table
std::string report_table_from_json(const std::string& json_text);

}  // namespace gradus
