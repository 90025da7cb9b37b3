#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "gradus/coeff.hpp"
#include "gradus/report.hpp"

namespace gradus {

/* Error with a source position; message reads "name:line:col: what". */
struct ScenarioError : EngineError {
  int line, col;
  ScenarioError(const std::string& name, int line_, int col_,
                const std::string& what)
      : EngineError(name + ":" + std::to_string(line_) + ":" +
                    std::to_string(col_) + ": " + what),
        line(line_),
        col(col_) {}
};

/* Parsed scenario file: sections [ring] / [objects] / [checks], line
   oriented. Grammar in docs/scenario-format.md. Objects and checks carry
   raw expression tokens; resolution against the ring happens in
   run_scenario, except that object names and check kinds are validated at
   parse time. */
struct Scenario {
  struct Object {
    std::string kind;  // "ideal" | "module"
    std::string name;
    std::vector<std::string> gen_exprs;  // cyclic quotient gens for modules
    bool integrally_closed = false;      // declared, not verified
    int line = 0;
  };
  struct Check {
    std::string kind;
    std::vector<std::string> args;    // tokens before "expect"
    std::vector<std::string> expect;  // tokens after "expect" (may be empty)
    int line = 0;
  };

  std::string name = "scenario";
  // ring: either semigroup generators (+ extra free vars) or explicit
  bool use_semigroup = false;
  std::vector<int64_t> sg_gens;
  std::vector<std::pair<std::string, int64_t>> extra_vars;
  std::vector<std::pair<std::string, int64_t>> vars;
  std::vector<std::string> relations;
  std::string field_spec = "q";  // "q" or "p:<prime>"
  long budget = 0;               // 0 = engine default

  std::vector<Object> objects;
  std::vector<Check> checks;
};

Scenario parse_scenario(const std::string& text, const std::string& name);
Scenario load_scenario(const std::string& path);
Report run_scenario(const Scenario& sc);

// compiled-in reproduction scenarios ("example-CGTT", "example-eg2", ...)
std::vector<std::string> builtin_scenario_names();
std::string builtin_scenario_text(const std::string& name);

struct SuiteParams {
  int bound = 0;  // 0 = suite default; scales enumeration depth
  unsigned long long seed = 1;
  std::string field_spec = "q";
  long budget = 0;
};

std::vector<std::string> suite_names();
Report run_suite(const std::string& name, const SuiteParams& p);

// the full reproduction set: every builtin scenario, then the jorgensen suite
std::vector<Report> run_examples(const SuiteParams& p);

CoeffField parse_field_spec(const std::string& spec);

}  // namespace gradus
