#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gradus/idealkit.hpp"
#include "gradus/ring.hpp"
#include "gradus/scenario.hpp"
#include "gradus/semigroup.hpp"

using namespace gradus;

namespace {

struct OutputOpts {
  std::string format = "table";
  std::string out;
};

void add_output_opts(CLI::App* cmd, OutputOpts& o) {
  cmd->add_option("--format", o.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  cmd->add_option("--out", o.out, "write the report to this file");
}

void emit(const Report& rep, const OutputOpts& o) {
  std::string text = o.format == "json" ? rep.json() : rep.table();
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) throw EngineError("cannot open output file " + o.out);
    f << text;
    std::cerr << "wrote " << o.out << "\n";
  }
}

std::vector<int64_t> parse_gen_list(const std::string& s) {
  std::vector<int64_t> gens;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    try {
      size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      gens.push_back(v);
    } catch (const std::exception&) {
      throw EngineError("bad generator '" + tok + "' in list \"" + s + "\"");
    }
  }
  if (gens.empty()) throw EngineError("empty generator list");
  return gens;
}

std::pair<std::string, int64_t> parse_weighted_var(const std::string& s) {
  auto pos = s.find(':');
  if (pos == std::string::npos) return {s, 1};
  try {
    return {s.substr(0, pos), std::stoll(s.substr(pos + 1))};
  } catch (const std::exception&) {
    throw EngineError("bad variable spec '" + s + "' (want name:weight)");
  }
}

int cmd_ring(const std::string& semigroup_spec,
             const std::vector<std::string>& extra,
             const std::vector<std::string>& var_specs,
             const std::vector<std::string>& relations,
             const std::string& field_spec, int64_t hilbert_to) {
  CoeffField F = parse_field_spec(field_spec);
  std::shared_ptr<GradedPolyRing> R;
  if (!semigroup_spec.empty()) {
    auto S = make_semigroup(parse_gen_list(semigroup_spec));
    std::vector<std::string> enames;
    std::vector<int64_t> eweights;
    for (const auto& e : extra) {
      auto [n, w] = parse_weighted_var(e);
      enames.push_back(n);
      eweights.push_back(w);
    }
    R = build_ring(S, enames, eweights, F);
    std::cout << "semigroup  <";
    for (size_t i = 0; i < S.gens.size(); ++i)
      std::cout << (i ? ", " : "") << S.gens[i];
    std::cout << ">\n";
    std::cout << "gaps       ";
    if (S.gaps.empty()) std::cout << "(none)";
    for (size_t i = 0; i < S.gaps.size(); ++i)
      std::cout << (i ? ", " : "") << S.gaps[i];
    std::cout << "\nfrobenius  " << S.frobenius << "\n";
    std::cout << "pseudo-frobenius ";
    for (size_t i = 0; i < S.pf.size(); ++i)
      std::cout << (i ? ", " : "") << S.pf[i];
    std::cout << "   (type " << S.type() << ")\n";
  } else {
    if (var_specs.empty())
      throw EngineError("need --semigroup or --vars (see ring --help)");
    std::vector<std::string> names;
    std::vector<int64_t> weights;
    for (const auto& v : var_specs) {
      auto [n, w] = parse_weighted_var(v);
      names.push_back(n);
      weights.push_back(w);
    }
    R = make_ring(names, weights, relations, F);
  }
  std::cout << "field      " << F.tag() << "\n";
  std::cout << "variables  ";
  for (int i = 0; i < R->nvars(); ++i)
    std::cout << (i ? ", " : "") << R->ctx().vars[(size_t)i] << " (deg "
              << R->ctx().weights[(size_t)i] << ")";
  std::cout << "\nrelations  ";
  if (R->relations().empty()) std::cout << "(none)";
  for (size_t i = 0; i < R->relations().size(); ++i)
    std::cout << (i ? ", " : "") << poly_str(R->ctx(), R->relations()[i]);
  std::cout << "\n";
  if (hilbert_to >= 0) {
    std::cout << "hilbert    ";
    for (int64_t d = 0; d <= hilbert_to; ++d)
      std::cout << (d ? " " : "") << R->dim_slice(d);
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gradus: exact homological computations over graded quotient rings"};
  app.require_subcommand(1);

  // ring
  std::string sg_spec, field_spec = "q";
  std::vector<std::string> extra, var_specs, relations;
  int64_t hilbert_to = -1;
  auto* ring = app.add_subcommand(
      "ring", "build a ring and print its presentation");
  ring->add_option("--semigroup", sg_spec,
                   "numerical semigroup generators, e.g. \"4 5 6\"");
  ring->add_option("--extra", extra,
                   "extra free variable name:weight (repeatable)");
  ring->add_option("--vars", var_specs, "variable name:weight (repeatable)");
  ring->add_option("--relations", relations,
                   "defining relation, e.g. x*y-z^2 (repeatable)");
  ring->add_option("--field", field_spec, "q (rationals) or p:<prime>");
  ring->add_option("--hilbert", hilbert_to,
                   "print dimensions of the graded slices 0..N");

  // check
  std::string check_file;
  OutputOpts check_out;
  auto* check = app.add_subcommand("check", "run a scenario file");
  check->add_option("file", check_file, "scenario file path")->required();
  add_output_opts(check, check_out);

  // suite
  std::string suite_name;
  bool suite_list = false;
  SuiteParams sp;
  OutputOpts suite_out;
  auto* suite = app.add_subcommand("suite", "run a named verification suite");
  suite->add_option("name", suite_name, "suite name (see --list)");
  suite->add_flag("--list", suite_list, "list available suites");
  suite->add_option("--bound", sp.bound, "enumeration depth override");
  suite->add_option("--seed", sp.seed, "sampling seed (default 1)");
  suite->add_option("--field", sp.field_spec, "q or p:<prime>");
  suite->add_option("--budget", sp.budget,
                    "basis-computation step budget (0 = unlimited)");
  add_output_opts(suite, suite_out);

  // examples
  SuiteParams ep;
  OutputOpts ex_out;
  auto* examples = app.add_subcommand(
      "examples", "run every built-in reproduction scenario and suite");
  examples->add_option("--seed", ep.seed, "sampling seed (default 1)");
  examples->add_option("--field", ep.field_spec, "q or p:<prime>");
  examples->add_option("--budget", ep.budget,
                       "basis-computation step budget (0 = unlimited)");
  add_output_opts(examples, ex_out);

  // report
  std::string report_file;
  auto* report = app.add_subcommand(
      "report", "re-render a saved JSON report as a table");
  report->add_option("file", report_file, "JSON report path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (ring->parsed())
      return cmd_ring(sg_spec, extra, var_specs, relations, field_spec,
                      hilbert_to);
    if (check->parsed()) {
      auto rep = run_scenario(load_scenario(check_file));
      emit(rep, check_out);
      return rep.exit_code();
    }
    if (suite->parsed()) {
      if (suite_list) {
        for (const auto& n : suite_names()) std::cout << n << "\n";
        return 0;
      }
      if (suite_name.empty())
        throw EngineError("suite: give a name or --list");
      auto rep = run_suite(suite_name, sp);
      emit(rep, suite_out);
      return rep.exit_code();
    }
    if (examples->parsed()) {
      auto reps = run_examples(ep);
      int worst = 0;
      std::string all_json = "[\n";
      for (size_t i = 0; i < reps.size(); ++i) {
        if (ex_out.format == "json") {
          std::string j = reps[i].json();
          if (!j.empty() && j.back() == '\n') j.pop_back();
          all_json += j + (i + 1 < reps.size() ? ",\n" : "\n");
        } else if (ex_out.out.empty()) {
          std::cout << reps[i].table() << "\n";
        }
        worst = std::max(worst, reps[i].exit_code());
      }
      all_json += "]\n";
      if (ex_out.format == "json") {
        OutputOpts tmp = ex_out;
        if (tmp.out.empty()) {
          std::cout << all_json;
        } else {
          std::ofstream f(tmp.out);
          if (!f) throw EngineError("cannot open output file " + tmp.out);
          f << all_json;
        }
      } else if (!ex_out.out.empty()) {
        std::ofstream f(ex_out.out);
        if (!f) throw EngineError("cannot open output file " + ex_out.out);
        for (const auto& r : reps) f << r.table() << "\n";
      }
      return worst;
    }
    if (report->parsed()) {
      std::ifstream f(report_file);
      if (!f) throw EngineError("cannot open " + report_file);
      std::stringstream ss;
      ss << f.rdbuf();
      std::cout << report_table_from_json(ss.str());
      return 0;
    }
  } catch (const EngineError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
