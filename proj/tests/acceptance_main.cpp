/* Acceptance gate: nine end-to-end criteria, one verdict line each.
   Exit status = number of failed criteria. Time limits are pinned here. */
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "gradus/fpmodule.hpp"
#include "gradus/homalg.hpp"
#include "gradus/ring.hpp"
#include "gradus/scenario.hpp"
#include "oracle_dense.hpp"

using namespace gradus;
using Clock = std::chrono::steady_clock;

namespace {

long ms_since(Clock::time_point t0) {
  return (long)std::chrono::duration_cast<std::chrono::milliseconds>(
             Clock::now() - t0)
      .count();
}

int g_failed = 0;

void verdict_line(const char* id, bool ok, const std::string& detail) {
  std::printf("[%s] %s: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failed;
}

void run_criterion(const char* id,
                   const std::function<std::pair<bool, std::string>()>& body) {
  try {
    auto r = body();
    verdict_line(id, r.first, r.second);
  } catch (const std::exception& e) {
    verdict_line(id, false, std::string("exception: ") + e.what());
  }
}

Report run_builtin(const std::string& name) {
  return run_scenario(parse_scenario(builtin_scenario_text(name), name));
}

const CheckResult* find_check(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string value_of(const CheckResult& c, const std::string& key) {
  for (const auto& kv : c.values)
    if (kv.first == key) return kv.second;
  return "";
}

/* Require a named check to have passed and carry an expected computed
   value; accumulates human-readable complaints. */
struct Expectations {
  const Report& rep;
  std::string complaints;
  bool ok = true;

  void fail(const std::string& why) {
    ok = false;
    complaints += (complaints.empty() ? "" : "; ") + why;
  }
  const CheckResult* passed(const std::string& name) {
    const CheckResult* c = find_check(rep, name);
    if (!c) {
      fail("missing check '" + name + "'");
      return nullptr;
    }
    if (c->verdict != "pass") {
      fail("check '" + name + "' verdict " + c->verdict + " (" + c->detail +
           ")");
      return nullptr;
    }
    return c;
  }
  void computed(const std::string& name, const std::string& want) {
    const CheckResult* c = passed(name);
    if (c && value_of(*c, "computed") != want)
      fail("check '" + name + "' computed " + value_of(*c, "computed") +
           ", wanted " + want);
  }
  void has_value(const std::string& name, const std::string& key) {
    const CheckResult* c = passed(name);
    if (c && value_of(*c, key).empty())
      fail("check '" + name + "' lacks a '" + key + "' entry");
  }
  void value_is(const std::string& name, const std::string& key,
                const std::string& want) {
    const CheckResult* c = passed(name);
    if (c && value_of(*c, key) != want)
      fail("check '" + name + "' " + key + " = " + value_of(*c, key) +
           ", wanted " + want);
  }
};

std::pair<bool, std::string> wrap(Expectations& ex, long ms, long limit_ms,
                                  const std::string& extra = "") {
  bool ok = ex.ok && ms < limit_ms;
  std::string detail = extra.empty() ? "" : extra + ", ";
  if (!ex.complaints.empty()) detail += ex.complaints + ", ";
  if (ms >= limit_ms)
    detail += "TIME LIMIT EXCEEDED: " + std::to_string(ms) + "ms >= " +
              std::to_string(limit_ms) + "ms";
  else
    detail += std::to_string(ms) + "ms (limit " + std::to_string(limit_ms) +
              "ms)";
  return {ok, detail};
}

// ---------------------------------------------------------------- A1 - A4

std::pair<bool, std::string> criterion_a1() {
  const long kLimitMs = 10'000;
  auto t0 = Clock::now();
  Report rep = run_builtin("example-CGTT");
  long ms = ms_since(t0);
  Expectations ex{rep};
  if (rep.exit_code() != 0)
    ex.fail("exit code " + std::to_string(rep.exit_code()));
  ex.computed("weakly_mfull I", "true");
  ex.computed("mfull I", "false");
  ex.has_value("mfull I", "note");  // the documented candidate argument
  ex.computed("depth_zero I", "true");
  ex.computed("burch I", "true");
  return wrap(ex, ms, kLimitMs);
}

std::pair<bool, std::string> criterion_a2() {
  const long kLimitMs = 60'000;
  auto t0 = Clock::now();
  Report rep = run_builtin("example-eg2");
  long ms = ms_since(t0);
  Expectations ex{rep};
  if (rep.exit_code() != 0)
    ex.fail("exit code " + std::to_string(rep.exit_code()));
  ex.computed("mfull I", "true");
  ex.value_is("mfull I", "witness", "u");
  ex.value_is("integral_witness I t^5 coeffs 0 -1*t^10", "valid", "true");
  ex.value_is("integral_witness I t^5 coeffs 0 -1*t^10", "r_in_ideal",
              "false");
  ex.computed("ext_zero I I 1 6", "true");
  ex.computed("id_probe I", "2");
  ex.computed("depth_quotient I", "1");
  return wrap(ex, ms, kLimitMs);
}

std::pair<bool, std::string> criterion_a3() {
  const long kLimitMs = 60'000;
  auto t0 = Clock::now();
  Report rep = run_builtin("example-it");
  long ms = ms_since(t0);
  Expectations ex{rep};
  if (rep.exit_code() != 0)
    ex.fail("exit code " + std::to_string(rep.exit_code()));
  ex.computed("id_probe I", "1");
  ex.computed("depth_zero I", "true");
  ex.computed("weakly_mfull I", "false");
  ex.computed("weakly_mfull m", "true");
  ex.computed("id_probe m", "exceeds(8)");
  ex.value_is("integral_witness I t^6 coeffs 0 0 -1*t^18", "valid", "true");
  ex.value_is("integral_witness I t^6 coeffs 0 0 -1*t^18", "r_in_ideal",
              "false");
  return wrap(ex, ms, kLimitMs);
}

std::pair<bool, std::string> criterion_a4() {
  const long kLimitMs = 30'000;
  auto t0 = Clock::now();
  Report rep = run_builtin("example-eg1");
  long ms = ms_since(t0);
  Expectations ex{rep};
  if (rep.exit_code() != 0)
    ex.fail("exit code " + std::to_string(rep.exit_code()));
  ex.computed("depth_quotient I", "1");
  ex.computed("id_probe I", "2");
  ex.computed("mfull I", "true");
  return wrap(ex, ms, kLimitMs);
}

// --------------------------------------------------------------------- A5

std::pair<bool, std::string> criterion_a5() {
  const long kLimitMs = 120'000;
  auto t0 = Clock::now();
  Report rep = run_suite("jorgensen", SuiteParams{});
  long ms = ms_since(t0);
  Expectations ex{rep};
  if (rep.checks.empty()) ex.fail("no checks ran");
  for (const auto& c : rep.checks)
    if (c.verdict != "pass")
      ex.fail("check '" + c.name + "' verdict " + c.verdict);
  return wrap(ex, ms, kLimitMs,
              std::to_string(rep.checks.size()) + " checks");
}

// --------------------------------------------------------------------- A6

std::pair<bool, std::string> criterion_a6() {
  const long kLimitMs = 600'000;
  auto t0 = Clock::now();
  Report rep = run_suite("lemmas", SuiteParams{});
  long ms = ms_since(t0);
  Expectations ex{rep};
  long non_vacuous = 0;
  for (const auto& c : rep.checks) {
    if (c.verdict != "pass")
      ex.fail("family '" + c.name + "' verdict " + c.verdict + " (" +
              c.detail + ")");
    if (value_of(c, "violations") != "0")
      ex.fail("family '" + c.name + "' has violations");
    non_vacuous += std::stol(value_of(c, "non_vacuous"));
  }
  for (const char* tag : {"3-4-5", "2-3", "eg1"}) {
    const std::string* v = rep.setting(std::string("modules_") + tag);
    if (!v)
      ex.fail(std::string("missing modules_") + tag);
    else if (std::stol(*v) < 30)
      ex.fail(std::string("ring ") + tag + " corpus has only " + *v +
              " modules (< 30)");
  }
  return wrap(ex, ms, kLimitMs,
              std::to_string(rep.checks.size()) + " families, " +
                  std::to_string(non_vacuous) + " verified instances");
}

// --------------------------------------------------------------------- A7

std::pair<bool, std::string> criterion_a7() {
  const long kLimitMs = 900'000;
  auto t0 = Clock::now();
  std::string note;
  bool all_ok = true;
  auto sub = [&](const std::string& why) {
    all_ok = false;
    note += (note.empty() ? "" : "; ") + why;
  };

  {
    Report rep = run_suite("cor-ext-pairs", SuiteParams{});
    Expectations ex{rep};
    const CheckResult* c = ex.passed("self-ext-pairs-never-both-zero");
    if (c) {
      if (std::stol(value_of(*c, "non_vacuous")) < 20)
        ex.fail("only " + value_of(*c, "non_vacuous") +
                " non-vacuous self-ext instances (< 20)");
      if (value_of(*c, "violations") != "0") ex.fail("self-ext violations");
    }
    if (!ex.ok) sub("cor-ext-pairs: " + ex.complaints);
  }
  {
    Report rep = run_suite("burch", SuiteParams{});
    Expectations ex{rep};
    long non_vacuous = 0;
    bool declared_vacuous = false;
    for (const auto& c : rep.checks) {
      if (c.verdict == "vacuous") declared_vacuous = true;
      if (c.verdict == "fail" || c.verdict == "error")
        ex.fail("family '" + c.name + "' verdict " + c.verdict);
      if (!value_of(c, "violations").empty() &&
          value_of(c, "violations") != "0")
        ex.fail("family '" + c.name + "' has violations");
      if (!value_of(c, "non_vacuous").empty())
        non_vacuous += std::stol(value_of(c, "non_vacuous"));
    }
    // either enough satisfied instances or the report says so explicitly
    if (non_vacuous < 50 && !declared_vacuous)
      ex.fail("only " + std::to_string(non_vacuous) +
              " non-vacuous instances without a declared-vacuous family");
    if (!ex.ok) sub("burch: " + ex.complaints);
  }
  {
    Report rep = run_suite("cor-window", SuiteParams{});
    Expectations ex{rep};
    const CheckResult* c = ex.passed("ext-against-ring-hits-every-window");
    if (c && c->detail.find("MISSED") != std::string::npos)
      ex.fail("a window was missed");
    if (!ex.ok) sub("cor-window: " + ex.complaints);
  }
  {
    Report rep = run_suite("rigidity", SuiteParams{});
    Expectations ex{rep};
    const std::string* samples = rep.setting("samples");
    if (!samples || *samples != "20")
      ex.fail("expected 20 samples, got " + (samples ? *samples : "none"));
    long triggered = 0;
    for (const auto& c : rep.checks) {
      if (c.verdict != "pass")
        ex.fail("check '" + c.name + "' verdict " + c.verdict);
      if (value_of(c, "violations") != "0")
        ex.fail("check '" + c.name + "' has violations");
      triggered += std::stol(value_of(c, "windows_triggered"));
    }
    if (triggered == 0) ex.fail("no windows triggered anywhere");
    if (!ex.ok) sub("rigidity: " + ex.complaints);
  }

  long ms = ms_since(t0);
  std::string detail = note.empty() ? "four suites verified" : note;
  if (ms >= kLimitMs) {
    all_ok = false;
    detail += "; TIME LIMIT EXCEEDED: " + std::to_string(ms) + "ms";
  } else {
    detail += ", " + std::to_string(ms) + "ms (limit " +
              std::to_string(kLimitMs) + "ms)";
  }
  return {all_ok, detail};
}

// --------------------------------------------------------------------- A8

std::pair<bool, std::string> criterion_a8() {
  struct TestRing {
    std::vector<std::string> vars;
    std::vector<std::string> rels;
    std::vector<std::vector<std::string>> mod_gens;  // cyclic quotients
  };
  // five Artinian quotients, 4 to 12 dimensional
  std::vector<TestRing> rings = {
      {{"x", "y"}, {"x^2", "y^2"}, {{"x", "y"}, {"x"}, {"y"}, {"x*y"}}},
      {{"x", "y"}, {"x^3", "y^2"}, {{"x", "y"}, {"x"}, {"x^2", "y"}}},
      {{"x", "y"}, {"x^4", "y^3"}, {{"x", "y"}, {"x*y"}, {"x^2", "y^2"}}},
      {{"x", "y", "z"},
       {"x^2", "y^2", "z^2"},
       {{"x", "y", "z"}, {"x", "y"}, {"x*y*z"}}},
      {{"x", "y"}, {"x^2", "x*y", "y^3"}, {{"x", "y"}, {"y"}, {"x", "y^2"}}}};

  long compared = 0;
  std::string first_bad;
  auto t0 = Clock::now();
  for (const auto& tr : rings) {
    std::vector<int64_t> w(tr.vars.size(), 1);
    auto R = make_ring(tr.vars, w, tr.rels, CoeffField::rationals(), {});
    auto A = oracle::flatten(R, 40);

    std::vector<FPModule> engine_mods;
    std::vector<oracle::DenseModule> dense_mods;
    for (const auto& gs : tr.mod_gens) {
      std::vector<Vec> gens;
      for (const auto& g : gs) gens.push_back(parse_poly(R->ctx(), g));
      engine_mods.push_back(fp_cyclic(R, gens, {}));
      dense_mods.push_back(oracle::cyclic(A, gens));
    }
    for (size_t a = 0; a < engine_mods.size(); ++a)
      for (size_t b = 0; b < engine_mods.size(); ++b) {
        for (int i = 0; i <= 4; ++i) {
          long oe = oracle::ext_dim(A, dense_mods[a], dense_mods[b], i);
          long ot = oracle::tor_dim(A, dense_mods[a], dense_mods[b], i);
          long ee = ext(engine_mods[a], engine_mods[b], i, {}).k_dimension;
          long et = tor(engine_mods[a], engine_mods[b], i, {}).k_dimension;
          compared += 2;
          if (oe != ee && first_bad.empty())
            first_bad = "ext^" + std::to_string(i) + " engine " +
                        std::to_string(ee) + " vs oracle " +
                        std::to_string(oe);
          if (ot != et && first_bad.empty())
            first_bad = "tor_" + std::to_string(i) + " engine " +
                        std::to_string(et) + " vs oracle " +
                        std::to_string(ot);
        }
        long os = oracle::stable_hom_dim(A, dense_mods[a], dense_mods[b]);
        long es = stable_hom(engine_mods[a], engine_mods[b], {}).k_dimension;
        ++compared;
        if (os != es && first_bad.empty())
          first_bad = "stable hom engine " + std::to_string(es) +
                      " vs oracle " + std::to_string(os);
      }
  }
  long ms = ms_since(t0);
  if (!first_bad.empty()) return {false, "first mismatch: " + first_bad};
  return {true, std::to_string(rings.size()) + " rings, " +
                    std::to_string(compared) +
                    " dimension comparisons agree exactly, " +
                    std::to_string(ms) + "ms"};
}

// --------------------------------------------------------------------- A9

std::pair<bool, std::string> criterion_a9() {
  SuiteParams p;
  p.seed = 7;
  long bytes = 0;
  for (const char* name : {"lemmas", "rigidity", "jorgensen"}) {
    std::string one = run_suite(name, p).json();
    std::string two = run_suite(name, p).json();
    if (one != two)
      return {false, std::string("suite '") + name +
                         "' JSON differs between reruns"};
    bytes += (long)one.size();
  }
  {
    std::string one =
        run_scenario(parse_scenario(builtin_scenario_text("example-it"),
                                    "example-it"))
            .json();
    std::string two =
        run_scenario(parse_scenario(builtin_scenario_text("example-it"),
                                    "example-it"))
            .json();
    if (one != two) return {false, "scenario JSON differs between reruns"};
    bytes += (long)one.size();
  }
  return {true, "reruns byte-identical (" + std::to_string(bytes) +
                    " bytes compared)"};
}

}  // namespace

int main() {
  std::printf("acceptance gate: %s\n", kEngineVersion);
  run_criterion("A1 candidate-filtration ideal verdicts", criterion_a1);
  run_criterion("A2 canonical ideal with free variable", criterion_a2);
  run_criterion("A3 four-generator semigroup verdicts", criterion_a3);
  run_criterion("A4 hypersurface principal ideal", criterion_a4);
  run_criterion("A5 two-relation windows suite", criterion_a5);
  run_criterion("A6 lemma families over three corpora", criterion_a6);
  run_criterion("A7 vanishing-pair family suites", criterion_a7);
  run_criterion("A8 dense linear-algebra oracle agreement", criterion_a8);
  run_criterion("A9 seeded rerun determinism", criterion_a9);
  std::printf("%d of 9 criteria failed\n", g_failed);
  return g_failed;
}
