#include "gradus/scenario.hpp"

#include <cctype>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>

#include "gradus/fpmodule.hpp"
#include "gradus/homalg.hpp"
#include "gradus/idealkit.hpp"
#include "gradus/ring.hpp"
#include "gradus/semigroup.hpp"

namespace gradus {

namespace {

struct Token {
  std::string text;
  int col;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace((unsigned char)line[i])) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    size_t j = i;
    while (j < line.size() && !std::isspace((unsigned char)line[j])) ++j;
    out.push_back(Token{line.substr(i, j - i), (int)i + 1});
    i = j;
  }
  return out;
}

int64_t parse_int(const std::string& origin, int line, const Token& t) {
  try {
    size_t pos = 0;
    int64_t v = std::stoll(t.text, &pos);
    if (pos != t.text.size()) throw std::invalid_argument("trail");
    return v;
  } catch (const std::exception&) {
    throw ScenarioError(origin, line, t.col,
                        "expected an integer, got '" + t.text + "'");
  }
}

// "name:weight"
std::pair<std::string, int64_t> parse_var(const std::string& origin, int line,
                                          const Token& t) {
  auto p = t.text.find(':');
  if (p == std::string::npos || p == 0 || p + 1 == t.text.size())
    throw ScenarioError(origin, line, t.col,
                        "expected name:weight, got '" + t.text + "'");
  Token w{t.text.substr(p + 1), t.col + (int)p + 1};
  return {t.text.substr(0, p), parse_int(origin, line, w)};
}

bool valid_name(const std::string& s) {
  if (s.empty() || std::isdigit((unsigned char)s[0])) return false;
  for (char c : s)
    if (!std::isalnum((unsigned char)c) && c != '_') return false;
  return true;
}

/* Check registry: name -> minimum argument count (before "expect").
   Unknown names are rejected when the file is loaded. */
const std::map<std::string, int>& check_registry() {
  static const std::map<std::string, int> reg = {
      {"weakly_mfull", 1},     {"mfull", 1},      {"depth_zero", 1},
      {"burch", 1},            {"id_probe", 1},   {"pd_probe", 1},
      {"depth", 1},            {"depth_quotient", 1},
      {"ext_zero", 4},         {"ext_nonzero", 3},
      {"tor_zero", 4},         {"tor_nonzero", 3},
      {"integral_witness", 4},
  };
  return reg;
}

bool reserved_name(const std::string& s) {
  return s == "m" || s == "R" || s == "k" || s == "t";
}

}  // namespace

CoeffField parse_field_spec(const std::string& spec) {
  if (spec == "q") return CoeffField::rationals();
  if (spec.rfind("p:", 0) == 0) {
    long p = 0;
    try {
      p = std::stol(spec.substr(2));
    } catch (const std::exception&) {
      throw EngineError("bad field spec '" + spec + "'");
    }
    return CoeffField::prime(p);
  }
  throw EngineError("bad field spec '" + spec + "' (use q or p:PRIME)");
}

Scenario parse_scenario(const std::string& text, const std::string& name) {
  Scenario sc;
  sc.name = name;
  std::istringstream in(text);
  std::string line;
  int ln = 0;
  enum Section { kNone, kRing, kObjects, kChecks } sect = kNone;

  while (std::getline(in, line)) {
    ++ln;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const Token& head = toks[0];

    if (head.text.front() == '[') {
      if (head.text == "[ring]") sect = kRing;
      else if (head.text == "[objects]") sect = kObjects;
      else if (head.text == "[checks]") sect = kChecks;
      else
        throw ScenarioError(name, ln, head.col,
                            "unknown section " + head.text);
      if (toks.size() > 1)
        throw ScenarioError(name, ln, toks[1].col,
                            "unexpected token after section header");
      continue;
    }
    if (sect == kNone)
      throw ScenarioError(name, ln, head.col,
                          "statement before any [section]");

    if (sect == kRing) {
      if (head.text == "semigroup") {
        if (toks.size() < 2)
          throw ScenarioError(name, ln, head.col, "semigroup needs generators");
        sc.use_semigroup = true;
        for (size_t i = 1; i < toks.size(); ++i)
          sc.sg_gens.push_back(parse_int(name, ln, toks[i]));
      } else if (head.text == "extra" || head.text == "vars") {
        auto& dst = head.text == "extra" ? sc.extra_vars : sc.vars;
        for (size_t i = 1; i < toks.size(); ++i) {
          auto v = parse_var(name, ln, toks[i]);
          if (v.second <= 0)
            throw ScenarioError(name, ln, toks[i].col,
                                "weight of " + v.first + " must be positive");
          dst.push_back(v);
        }
      } else if (head.text == "relations") {
        for (size_t i = 1; i < toks.size(); ++i)
          sc.relations.push_back(toks[i].text);
      } else if (head.text == "field") {
        if (toks.size() != 2)
          throw ScenarioError(name, ln, head.col, "field takes one token");
        sc.field_spec = toks[1].text;
        parse_field_spec(sc.field_spec);  // validate now
      } else if (head.text == "budget") {
        if (toks.size() != 2)
          throw ScenarioError(name, ln, head.col, "budget takes one integer");
        sc.budget = parse_int(name, ln, toks[1]);
      } else {
        throw ScenarioError(name, ln, head.col,
                            "unknown ring statement '" + head.text + "'");
      }
      continue;
    }

    if (sect == kObjects) {
      if (head.text == "ideal" || head.text == "module") {
        if (toks.size() < 3)
          throw ScenarioError(name, ln, head.col,
                              head.text + " needs a name and generators");
        Scenario::Object ob;
        ob.kind = head.text;
        ob.name = toks[1].text;
        ob.line = ln;
        if (!valid_name(ob.name) || reserved_name(ob.name))
          throw ScenarioError(name, ln, toks[1].col,
                              "bad object name '" + ob.name + "'");
        for (const auto& prev : sc.objects)
          if (prev.name == ob.name)
            throw ScenarioError(name, ln, toks[1].col,
                                "duplicate object name '" + ob.name + "'");
        size_t gi = 2;
        if (ob.kind == "module") {
          if (toks[2].text != "quotient")
            throw ScenarioError(name, ln, toks[2].col,
                                "module form: module NAME quotient gens...");
          gi = 3;
        }
        for (size_t i = gi; i < toks.size(); ++i)
          ob.gen_exprs.push_back(toks[i].text);
        if (ob.gen_exprs.empty())
          throw ScenarioError(name, ln, head.col, "no generators given");
        sc.objects.push_back(std::move(ob));
      } else if (head.text == "declare") {
        if (toks.size() != 3 || toks[1].text != "integrally_closed")
          throw ScenarioError(name, ln, head.col,
                              "declare form: declare integrally_closed NAME");
        bool found = false;
        for (auto& ob : sc.objects)
          if (ob.name == toks[2].text) {
            ob.integrally_closed = true;
            found = true;
          }
        if (!found && toks[2].text != "m")
          throw ScenarioError(name, ln, toks[2].col,
                              "undeclared object '" + toks[2].text + "'");
      } else {
        throw ScenarioError(name, ln, head.col,
                            "unknown object statement '" + head.text + "'");
      }
      continue;
    }

    // [checks]
    auto it = check_registry().find(head.text);
    if (it == check_registry().end())
      throw ScenarioError(name, ln, head.col,
                          "unknown check '" + head.text + "'");
    Scenario::Check ck;
    ck.kind = head.text;
    ck.line = ln;
    size_t i = 1;
    for (; i < toks.size() && toks[i].text != "expect"; ++i)
      ck.args.push_back(toks[i].text);
    if (i < toks.size())  // skip "expect"
      for (++i; i < toks.size(); ++i) ck.expect.push_back(toks[i].text);
    if ((int)ck.args.size() < it->second)
      throw ScenarioError(name, ln, head.col,
                          ck.kind + " needs at least " +
                              std::to_string(it->second) + " arguments");
    // object references must resolve to declared names or built-ins
    auto known = [&](const std::string& nm) {
      if (nm == "m" || nm == "R" || nm == "k") return true;
      for (const auto& ob : sc.objects)
        if (ob.name == nm) return true;
      return false;
    };
    int nrefs = ck.kind == "ext_zero" || ck.kind == "ext_nonzero" ||
                        ck.kind == "tor_zero" || ck.kind == "tor_nonzero"
                    ? 2
                    : 1;
    for (int r = 0; r < nrefs; ++r)
      if (!known(ck.args[(size_t)r]))
        throw ScenarioError(name, ln, toks[(size_t)r + 1].col,
                            "unknown object '" + ck.args[(size_t)r] + "'");
    sc.checks.push_back(std::move(ck));
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw EngineError("cannot open scenario file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str(), path);
}

namespace {

/* Expand t^K tokens against the semigroup ring; the replacement is the
   greedy monomial's printed form, parenthesized. */
std::string expand_t(const GradedPolyRing& R, const std::string& expr,
                     const std::string& origin, int line) {
  std::string out;
  size_t i = 0;
  while (i < expr.size()) {
    bool boundary = i == 0 || (!std::isalnum((unsigned char)expr[i - 1]) &&
                               expr[i - 1] != '_');
    if (expr[i] == 't' && boundary) {
      bool has_pow = i + 1 < expr.size() && expr[i + 1] == '^' &&
                     i + 2 < expr.size() &&
                     std::isdigit((unsigned char)expr[i + 2]);
      bool bare_end = i + 1 == expr.size() ||
                      (!std::isalnum((unsigned char)expr[i + 1]) &&
                       expr[i + 1] != '_' && expr[i + 1] != '^');
      if (has_pow) {
        size_t j = i + 2;
        while (j < expr.size() && std::isdigit((unsigned char)expr[j])) ++j;
        int64_t e = std::stoll(expr.substr(i + 2, j - i - 2));
        if (!R.semigroup)
          throw ScenarioError(origin, line, (int)i + 1,
                              "t-power notation needs a semigroup ring");
        auto v = t_power(R, e);
        if (!v)
          throw ScenarioError(origin, line, (int)i + 1,
                              "t^" + std::to_string(e) +
                                  " is a gap of the semigroup");
        out += "(" + poly_str(R.ctx(), *v) + ")";
        i = j;
        continue;
      }
      if (bare_end)
        throw ScenarioError(origin, line, (int)i + 1,
                            "bare 't' (use t^K notation)");
    }
    out += expr[i];
    ++i;
  }
  return out;
}

struct Runtime {
  std::shared_ptr<GradedPolyRing> R;
  GBOptions opt;
  std::string origin;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, FPModule> modules;

  Vec expr(const std::string& e, int line) const {
    return R->element(expand_t(*R, e, origin, line));
  }

  Ideal ideal_of(const std::string& nm, int line) const {
    if (nm == "m") return maximal_ideal(R);
    auto it = ideals.find(nm);
    if (it == ideals.end())
      throw ScenarioError(origin, line, 1, "'" + nm + "' is not an ideal");
    return it->second;
  }

  FPModule module_of(const std::string& nm, int line) const {
    if (nm == "R") return fp_free(R, {0});
    if (nm == "k") return fp_k(R, opt);
    if (nm == "m") return fp_ideal(R, maximal_ideal(R).gens, opt);
    auto mi = modules.find(nm);
    if (mi != modules.end()) return mi->second;
    auto it = ideals.find(nm);
    if (it != ideals.end()) return fp_ideal(R, it->second.gens, opt);
    throw ScenarioError(origin, line, 1, "'" + nm + "' is not defined");
  }
};

std::string probe_str(const DimensionProbe& p) {
  if (p.exceeded) return "exceeds(" + std::to_string(p.bound) + ")";
  if (p.value) return std::to_string(*p.value);
  return "unknown";
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

CheckResult run_check(const Runtime& rt, const Scenario::Check& ck) {
  CheckResult res;
  res.name = ck.kind;
  for (const auto& a : ck.args) res.name += " " + a;
  const auto& ex = ck.expect;
  auto settle = [&](const std::string& computed) {
    res.values.emplace_back("computed", computed);
    if (ex.empty()) {
      res.verdict = "pass";
      res.detail = computed;
    } else if (ex[0] == computed) {
      res.verdict = "pass";
      res.detail = computed + " as expected";
    } else {
      res.verdict = "fail";
      res.detail = "computed " + computed + ", expected " + ex[0];
    }
  };

  if (ck.kind == "weakly_mfull") {
    settle(bool_str(is_weakly_mfull(rt.ideal_of(ck.args[0], ck.line), rt.opt)));
  } else if (ck.kind == "depth_zero") {
    settle(bool_str(depth_zero(rt.ideal_of(ck.args[0], ck.line), rt.opt)));
  } else if (ck.kind == "burch") {
    settle(bool_str(burch_condition(rt.ideal_of(ck.args[0], ck.line), rt.opt)));
  } else if (ck.kind == "mfull") {
    auto v = is_mfull(rt.ideal_of(ck.args[0], ck.line), 64, rt.opt);
    std::string computed = v.kind == MFullVerdict::kTrue ? "true"
                           : v.kind == MFullVerdict::kFalseOnCandidates
                               ? "false"
                               : "unknown";
    settle(computed);
    if (!v.note.empty()) res.values.emplace_back("note", v.note);
    if (v.witness)
      res.values.emplace_back("witness", poly_str(rt.R->ctx(), *v.witness));
    // optional: expect ... witness NAME
    for (size_t i = 1; i + 1 < ex.size(); ++i) {
      if (ex[i] != "witness") continue;
      Vec want = rt.expr(ex[i + 1], ck.line);
      if (!v.witness || !rt.R->eq(*v.witness, want)) {
        res.verdict = "fail";
        res.detail += "; witness mismatch (expected " + ex[i + 1] + ")";
      }
    }
  } else if (ck.kind == "id_probe") {
    auto M = rt.module_of(ck.args[0], ck.line);
    auto p = id_probe(M, 8, rt.opt);
    settle(probe_str(p));
    res.values.emplace_back("method", p.method);
    if (p.heuristic_certificate)
      res.values.emplace_back("heuristic", "true");
  } else if (ck.kind == "pd_probe") {
    settle(probe_str(pd_probe(rt.module_of(ck.args[0], ck.line), 8, rt.opt)));
  } else if (ck.kind == "depth") {
    settle(probe_str(depth_probe(rt.module_of(ck.args[0], ck.line), 8, rt.opt)));
  } else if (ck.kind == "depth_quotient") {
    Ideal I = rt.ideal_of(ck.args[0], ck.line);
    settle(probe_str(depth_probe(fp_cyclic(rt.R, I.gens, rt.opt), 8, rt.opt)));
  } else if (ck.kind == "ext_zero" || ck.kind == "tor_zero") {
    auto A = rt.module_of(ck.args[0], ck.line);
    auto B = rt.module_of(ck.args[1], ck.line);
    long lo = std::stol(ck.args[2]), hi = std::stol(ck.args[3]);
    bool all_zero = true;
    std::string dims;
    for (long i = lo; i <= hi; ++i) {
      auto rep = ck.kind == "ext_zero" ? ext(A, B, (int)i, rt.opt)
                                       : tor(A, B, (int)i, rt.opt);
      if (!rep.is_zero) all_zero = false;
      dims += (i > lo ? "," : "") +
              (rep.is_zero ? std::string("0")
                           : rep.finite_length
                                 ? std::to_string(rep.k_dimension)
                                 : std::string("nonzero"));
    }
    res.values.emplace_back("dims", dims);
    settle(bool_str(all_zero));
  } else if (ck.kind == "ext_nonzero" || ck.kind == "tor_nonzero") {
    auto A = rt.module_of(ck.args[0], ck.line);
    auto B = rt.module_of(ck.args[1], ck.line);
    long i = std::stol(ck.args[2]);
    auto rep = ck.kind == "ext_nonzero" ? ext(A, B, (int)i, rt.opt)
                                        : tor(A, B, (int)i, rt.opt);
    if (rep.finite_length)
      res.values.emplace_back("dim", std::to_string(rep.k_dimension));
    settle(bool_str(!rep.is_zero));
  } else if (ck.kind == "integral_witness") {
    Ideal I = rt.ideal_of(ck.args[0], ck.line);
    Vec r = rt.expr(ck.args[1], ck.line);
    if (ck.args[2] != "coeffs")
      throw ScenarioError(rt.origin, ck.line, 1,
                          "integral_witness form: I r coeffs a1..an");
    std::vector<Vec> coeffs;
    for (size_t i = 3; i < ck.args.size(); ++i)
      coeffs.push_back(rt.expr(ck.args[i], ck.line));
    auto w = integral_witness_check(I, r, coeffs, rt.opt);
    res.values.emplace_back("valid", bool_str(w.valid));
    res.values.emplace_back("r_in_ideal", bool_str(w.r_in_ideal));
    bool ok = ex.empty() ? w.valid : true;
    std::string why;
    for (const auto& e : ex) {
      if (e == "valid") ok = ok && w.valid;
      else if (e == "invalid") ok = ok && !w.valid;
      else if (e == "notin") ok = ok && !w.r_in_ideal;
      else if (e == "in") ok = ok && w.r_in_ideal;
      else
        throw ScenarioError(rt.origin, ck.line, 1,
                            "integral_witness expects valid/invalid/notin/in");
      why += (why.empty() ? "" : " ") + e;
    }
    res.verdict = ok ? "pass" : "fail";
    res.detail = std::string(w.valid ? "valid" : "invalid") +
                 (w.r_in_ideal ? ", r in ideal" : ", r outside ideal");
    if (!ex.empty() && !ok) res.detail += "; expected " + why;
  } else {
    throw EngineError("unhandled check kind " + ck.kind);
  }
  return res;
}

}  // namespace

Report run_scenario(const Scenario& sc) {
  Report rep;
  rep.title = sc.name;
  rep.field = parse_field_spec(sc.field_spec).tag();

  Runtime rt;
  rt.origin = sc.name;
  if (sc.budget > 0) rt.opt.budget = sc.budget;
  CoeffField F = parse_field_spec(sc.field_spec);

  if (sc.use_semigroup) {
    auto S = make_semigroup(sc.sg_gens);
    std::vector<std::string> en;
    std::vector<int64_t> ew;
    for (const auto& v : sc.extra_vars) {
      en.push_back(v.first);
      ew.push_back(v.second);
    }
    rt.R = build_ring(S, en, ew, F, rt.opt);
    std::string g;
    for (int64_t a : sc.sg_gens) g += (g.empty() ? "" : " ") + std::to_string(a);
    rep.set("semigroup", g);
  } else {
    if (sc.vars.empty())
      throw ScenarioError(sc.name, 1, 1, "no ring declared");
    std::vector<std::string> vn;
    std::vector<int64_t> vw;
    for (const auto& v : sc.vars) {
      vn.push_back(v.first);
      vw.push_back(v.second);
    }
    rt.R = make_ring(vn, vw, sc.relations, F, rt.opt);
  }
  if (sc.budget > 0) rep.set("budget", std::to_string(sc.budget));

  for (const auto& ob : sc.objects) {
    std::vector<Vec> gens;
    for (const auto& e : ob.gen_exprs) gens.push_back(rt.expr(e, ob.line));
    if (ob.kind == "ideal")
      rt.ideals.emplace(ob.name, make_ideal(rt.R, gens));
    else
      rt.modules.emplace(ob.name, fp_cyclic(rt.R, gens, rt.opt));
  }

  for (const auto& ck : sc.checks) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult res;
    try {
      res = run_check(rt, ck);
    } catch (const ScenarioError&) {
      throw;  // malformed check: the scenario itself is invalid
    } catch (const EngineError& e) {
      res.name = ck.kind;
      for (const auto& a : ck.args) res.name += " " + a;
      res.verdict = "error";
      res.detail = e.what();
    }
    res.wall_ms = (long)std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    rep.checks.push_back(std::move(res));
  }
  return rep;
}

namespace {

const std::vector<std::pair<std::string, std::string>>& builtins() {
  static const std::vector<std::pair<std::string, std::string>> b = {
      {"example-CGTT", R"(# weakly m-full but not m-full; Burch condition holds
[ring]
semigroup 4 5 6
[objects]
ideal I t^4 t^11
[checks]
weakly_mfull I expect true
mfull I expect false
depth_zero I expect true
burch I expect true
)"},
      {"example-eg2", R"(# the canonical ideal (t^3,t^4) of the <3,4,5>-ring with a free variable:
# m-full with witness u, finite injective dimension, all self-Ext vanish
[ring]
semigroup 3 4 5
extra u:1
[objects]
ideal I t^3 t^4
[checks]
mfull I expect true witness u
integral_witness I t^5 coeffs 0 -1*t^10 expect valid notin
ext_zero I I 1 6 expect true
id_probe I expect 2
depth_quotient I expect 1
)"},
      {"example-it", R"(# the <5,6,8,9>-ring: canonical ideal of injective dimension one,
# maximal ideal weakly m-full of infinite injective dimension
[ring]
semigroup 5 6 8 9
[objects]
ideal I t^5 t^8 t^9
[checks]
id_probe I expect 1
depth_zero I expect true
weakly_mfull I expect false
weakly_mfull m expect true
id_probe m expect exceeds(8)
integral_witness I t^6 coeffs 0 0 -1*t^18 expect valid notin
)"},
      {"example-eg1", R"(# hypersurface Q[x,y,z]/(xy - z^2): the principal (x) has depth(R/(x)) = 1,
# injective dimension 2, and is m-full
[ring]
vars x:1 y:1 z:1
relations x*y-z^2
[objects]
ideal I x
[checks]
depth_quotient I expect 1
id_probe I expect 2
mfull I expect true
)"},
  };
  return b;
}

}  // namespace

std::vector<std::string> builtin_scenario_names() {
  std::vector<std::string> out;
  for (const auto& kv : builtins()) out.push_back(kv.first);
  return out;
}

std::string builtin_scenario_text(const std::string& name) {
  for (const auto& kv : builtins())
    if (kv.first == name) return kv.second;
  throw EngineError("unknown builtin scenario '" + name + "'");
}

std::vector<Report> run_examples(const SuiteParams& p) {
  std::vector<Report> out;
  for (const auto& kv : builtins()) {
    Scenario sc = parse_scenario(kv.second, kv.first);
    if (p.budget > 0) sc.budget = p.budget;
    if (p.field_spec != "q") sc.field_spec = p.field_spec;
    out.push_back(run_scenario(sc));
  }
  out.push_back(run_suite("jorgensen", p));
  return out;
}

}  // namespace gradus
