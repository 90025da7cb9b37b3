#include "doctest.h"
#include "gradus/scenario.hpp"

using namespace gradus;

TEST_CASE("field specs parse or fail loudly") {
  CHECK(parse_field_spec("q").tag() == "rationals");
  CHECK(parse_field_spec("p:101").tag() == "prime:101");
  CHECK_THROWS_AS((void)parse_field_spec("p:4"), EngineError);
  CHECK_THROWS_AS((void)parse_field_spec("reals"), EngineError);
}

TEST_CASE("parse errors carry file positions") {
  auto expect_pos = [](const std::string& text, int line) {
    try {
      (void)parse_scenario(text, "t");
      FAIL("expected a parse error");
    } catch (const ScenarioError& e) {
      CHECK(e.line == line);
      CHECK(std::string(e.what()).rfind("t:", 0) == 0);
    }
  };
  expect_pos("[ring]\nsemigroup 4 5 6\n[checks]\nbogus I expect true\n", 4);
  expect_pos("[ring]\nsemigroup 4 5\n[objects]\nideal I\n", 4);  // no gens
  expect_pos("[ring]\nsemigroup 4 5 6\n[objects]\nideal m t^4\n", 4);
  expect_pos("[ring]\nsemigroup 4 5 6\n[checks]\next_zero A A 1 2\n", 4);
  expect_pos("[ring]\nvars x:0\n", 2);
  expect_pos("[bogus]\n", 1);
}

TEST_CASE("checks know their argument counts at load time") {
  // ext_zero wants module module lo hi
  CHECK_THROWS_AS((void)parse_scenario("[ring]\nsemigroup 4 5 6\n[objects]\n"
                                       "ideal I t^4\n[checks]\n"
                                       "ext_zero I I 1\n",
                                       "t"),
                  ScenarioError);
  auto sc = parse_scenario("[ring]\nsemigroup 4 5 6\n[objects]\nideal I t^4\n"
                           "[checks]\next_zero I I 1 2\n",
                           "t");
  REQUIRE(sc.checks.size() == 1);
  CHECK(sc.checks[0].kind == "ext_zero");
  CHECK(sc.checks[0].args.size() == 4);
}

TEST_CASE("uniformizer powers expand only where they exist") {
  auto sc = parse_scenario("[ring]\nsemigroup 4 5 6\n[objects]\nideal I t^7\n"
                           "[checks]\ndepth_zero I expect true\n",
                           "t");
  CHECK_THROWS_AS((void)run_scenario(sc), EngineError);  // 7 is a gap
  auto sc2 = parse_scenario("[ring]\nvars x:1\n[objects]\nideal I t^2\n"
                            "[checks]\ndepth_zero I expect true\n",
                            "t");
  CHECK_THROWS_AS((void)run_scenario(sc2), EngineError);  // no semigroup ring
}

TEST_CASE("builtin reproduction scenarios all pass") {
  for (const auto& nm : builtin_scenario_names()) {
    auto rep = run_scenario(parse_scenario(builtin_scenario_text(nm), nm));
    INFO(nm);
    CHECK(rep.exit_code() == 0);
    CHECK(rep.failed() == 0);
    CHECK(rep.errors() == 0);
    CHECK(rep.checks.size() > 0);
  }
}

TEST_CASE("scenario reports are byte-stable across reruns") {
  auto sc = parse_scenario(builtin_scenario_text("example-CGTT"),
                           "example-CGTT");
  CHECK(run_scenario(sc).json() == run_scenario(sc).json());
}

TEST_CASE("expected-value mismatches flip the verdict to fail") {
  auto sc = parse_scenario("[ring]\nsemigroup 4 5 6\n[objects]\n"
                           "ideal I t^4 t^11\n[checks]\n"
                           "weakly_mfull I expect false\n",
                           "t");
  auto rep = run_scenario(sc);
  CHECK(rep.exit_code() == 1);
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].verdict == "fail");
}

TEST_CASE("engine errors inside one check do not stop the others") {
  auto sc = parse_scenario("[ring]\nsemigroup 4 5 6\nbudget 1\n[objects]\n"
                           "ideal I t^4 t^11\n[checks]\n"
                           "weakly_mfull I expect true\n",
                           "t");
  auto rep = run_scenario(sc);
  CHECK(rep.errors() >= 1);
  CHECK(rep.exit_code() == 2);
}

TEST_CASE("reports render to tables and reproducible json") {
  Report rep;
  rep.title = "demo";
  rep.set("note", "value");
  CheckResult a;
  a.name = "first";
  a.verdict = "pass";
  a.detail = "fine";
  a.values.emplace_back("dims", "1,2");
  rep.checks.push_back(a);
  CHECK(rep.exit_code() == 0);
  auto tbl = report_table_from_json(rep.json());
  CHECK(tbl.find("first") != std::string::npos);
  CHECK(tbl.find("dims=1,2") != std::string::npos);
  CHECK(rep.json().find("wall") == std::string::npos);

  CheckResult b;
  b.name = "second";
  b.verdict = "fail";
  rep.checks.push_back(b);
  CHECK(rep.exit_code() == 1);
  CheckResult c;
  c.name = "third";
  c.verdict = "error";
  rep.checks.push_back(c);
  CHECK(rep.exit_code() == 2);
}

TEST_CASE("empty reports pass vacuously") {
  Report rep;
  rep.title = "empty";
  CHECK(rep.ok());
  CHECK(rep.exit_code() == 0);
}

TEST_CASE("suites are enumerable and reject unknown names") {
  auto names = suite_names();
  CHECK(names.size() == 10);
  CHECK_THROWS_AS((void)run_suite("nope", SuiteParams{}), EngineError);
}
