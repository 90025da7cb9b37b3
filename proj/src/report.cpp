#include "gradus/report.hpp"

#include <algorithm>
#include <sstream>

#include "gradus/coeff.hpp"
#include "json.hpp"

namespace gradus {

using ordered_json = nlohmann::ordered_json;

int Report::count(const char* verdict) const {
  int n = 0;
  for (const auto& c : checks)
    if (c.verdict == verdict) ++n;
  return n;
}

int Report::exit_code() const {
  if (errors() > 0) return 2;
  if (failed() > 0) return 1;
  return 0;
}

const std::string* Report::setting(const std::string& key) const {
  for (const auto& kv : settings)
    if (kv.first == key) return &kv.second;
  return nullptr;
}

void Report::set(const std::string& key, const std::string& value) {
  for (auto& kv : settings)
    if (kv.first == key) {
      kv.second = value;
      return;
    }
  settings.emplace_back(key, value);
}

std::string Report::json() const {
  ordered_json doc;
  doc["title"] = title;
  doc["engine"] = engine;
  doc["field"] = field;
  doc["seed"] = seed;
  ordered_json js = ordered_json::object();
  for (const auto& kv : settings) js[kv.first] = kv.second;
  doc["settings"] = js;
  doc["summary"] = {{"pass", passed()},
                    {"fail", failed()},
                    {"vacuous", vacuous()},
                    {"error", errors()}};
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json jc;
    jc["name"] = c.name;
    jc["verdict"] = c.verdict;
    jc["detail"] = c.detail;
    ordered_json vals = ordered_json::object();
    for (const auto& kv : c.values) vals[kv.first] = kv.second;
    jc["values"] = vals;
    arr.push_back(std::move(jc));
  }
  doc["checks"] = arr;
  return doc.dump(2) + "\n";
}

std::string Report::table() const {
  size_t wname = 5, wverd = 7;
  for (const auto& c : checks) {
    wname = std::max(wname, c.name.size());
    wverd = std::max(wverd, c.verdict.size());
  }
  std::ostringstream os;
  os << "== " << title << " ==  (" << engine << ", field " << field
     << ", seed " << seed << ")\n";
  for (const auto& kv : settings)
    os << "   " << kv.first << " = " << kv.second << "\n";
  auto pad = [](const std::string& s, size_t w) {
    return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
  };
  os << pad("check", wname) << "  " << pad("verdict", wverd)
     << "  ms      detail\n";
  for (const auto& c : checks) {
    std::string ms = std::to_string(c.wall_ms);
    os << pad(c.name, wname) << "  " << pad(c.verdict, wverd) << "  "
       << pad(ms, 6) << "  " << c.detail;
    for (const auto& kv : c.values)
      os << (&kv == &c.values.front() && c.detail.empty() ? "" : "; ")
         << kv.first << "=" << kv.second;
    os << "\n";
  }
  os << "-- pass " << passed() << ", fail " << failed() << ", vacuous "
     << vacuous() << ", error " << errors() << " --\n";
  return os.str();
}

std::string report_table_from_json(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    throw EngineError(std::string("report: bad JSON: ") + e.what());
  }
  Report r;
  r.title = doc.value("title", "");
  r.engine = doc.value("engine", "");
  r.field = doc.value("field", "");
  r.seed = doc.value("seed", 0ULL);
  if (doc.contains("settings"))
    for (auto it = doc["settings"].begin(); it != doc["settings"].end(); ++it)
      r.settings.emplace_back(it.key(), it.value().get<std::string>());
  if (doc.contains("checks"))
    for (const auto& jc : doc["checks"]) {
      CheckResult c;
      c.name = jc.value("name", "");
      c.verdict = jc.value("verdict", "");
      c.detail = jc.value("detail", "");
      if (jc.contains("values"))
        for (auto it = jc["values"].begin(); it != jc["values"].end(); ++it)
          c.values.emplace_back(it.key(), it.value().get<std::string>());
      r.checks.push_back(std::move(c));
    }
  return r.table();
}

}  // namespace gradus
