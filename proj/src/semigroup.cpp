#include "gradus/semigroup.hpp"

#include <algorithm>
#include <memory>
#include <numeric>

namespace gradus {

namespace {

// reachability table over `gens` for degrees 0..bound (inclusive)
std::vector<char> reach_table(const std::vector<int64_t>& gens, int64_t bound) {
  std::vector<char> reach((size_t)bound + 1, 0);
  reach[0] = 1;
  for (int64_t d = 1; d <= bound; ++d)
    for (int64_t g : gens)
      if (g <= d && reach[(size_t)(d - g)]) {
        reach[(size_t)d] = 1;
        break;
      }
  return reach;
}

const char* kDefaultNames[] = {"x", "y", "z", "w", "v", "q"};

}  // namespace

bool NumericalSemigroup::contains(int64_t d) const {
  if (d < 0) return false;
  if (d > frobenius) return true;
  return !std::binary_search(gaps.begin(), gaps.end(), d);
}

NumericalSemigroup make_semigroup(std::vector<int64_t> gens) {
  if (gens.empty()) throw EngineError("semigroup: no generators");
  for (int64_t g : gens)
    if (g <= 0)
      throw EngineError("semigroup: generator " + std::to_string(g) +
                        " is not positive");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  int64_t g = 0;
  for (int64_t a : gens) g = std::gcd(g, a);
  if (g != 1)
    throw EngineError("semigroup: generators have common divisor " +
                      std::to_string(g));

  // minimality: no generator is a sum of the others
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens.size() == 1) break;
    std::vector<int64_t> others;
    for (size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    if (reach_table(others, gens[i])[(size_t)gens[i]])
      throw EngineError("semigroup: generator " + std::to_string(gens[i]) +
                        " is redundant");
  }

  // grow the table until min(gens) consecutive members appear; from there on
  // everything is a member, so all gaps are already visible
  NumericalSemigroup S;
  S.gens = gens;
  const int64_t amin = gens.front(), amax = gens.back();
  const int64_t kCap = 1 << 20;
  int64_t bound = amin * amax + amax;
  std::vector<char> reach;
  int64_t conductor = -1;
  for (;;) {
    if (bound > kCap) throw EngineError("semigroup: conductor search overflow");
    reach = reach_table(gens, bound);
    int64_t run = 0;
    for (int64_t d = 0; d <= bound; ++d) {
      run = reach[(size_t)d] ? run + 1 : 0;
      if (run == amin) {
        conductor = d - amin + 1;
        break;
      }
    }
    if (conductor >= 0) break;
    bound *= 2;
  }
  for (int64_t d = 0; d < conductor; ++d)
    if (!reach[(size_t)d]) S.gaps.push_back(d);
  S.frobenius = S.gaps.empty() ? -1 : S.gaps.back();

  for (int64_t p : S.gaps) {
    bool pseudo = true;
    for (int64_t a : gens) {
      int64_t q = p + a;
      bool in = q >= conductor || (q >= 0 && reach[(size_t)q]);
      if (!in) {
        pseudo = false;
        break;
      }
    }
    if (pseudo) S.pf.push_back(p);
  }
  return S;
}

std::shared_ptr<GradedPolyRing> build_ring(
    const NumericalSemigroup& S, const std::vector<std::string>& extra_vars,
    const std::vector<int64_t>& extra_weights, CoeffField field,
    GBOptions opt) {
  const size_t s = S.gens.size();
  if (extra_vars.size() != extra_weights.size())
    throw EngineError("build_ring: extra variable/weight count mismatch");
  for (int64_t w : extra_weights)
    if (w <= 0) throw EngineError("build_ring: extra weights must be positive");

  std::vector<std::string> names;
  for (size_t i = 0; i < s; ++i)
    names.push_back(i < 6 ? kDefaultNames[i]
                          : "g" + std::to_string(S.gens[i]));
  for (const auto& v : extra_vars) {
    if (std::find(names.begin(), names.end(), v) != names.end())
      throw EngineError("build_ring: variable name collision on " + v);
    names.push_back(v);
  }

  /* Fiber completion over the semigroup variables alone. Every binomial
     added joins two monomials of equal weighted degree, hence lies in the
     toric ideal; the loop ends with indicator-sized slices up to
     frobenius + 2 max(gens), which pins the whole ideal. */
  std::vector<std::string> sg_names(names.begin(), names.begin() + s);
  std::vector<Vec> rels;
  auto cover = std::make_unique<GradedPolyRing>(sg_names, S.gens,
                                                std::vector<Vec>(rels), field,
                                                opt);
  const int64_t dmax =
      (S.frobenius < 0 ? 0 : S.frobenius) + 2 * S.gens.back();
  for (int64_t d = 2; d <= dmax; ++d) {
    const long target = S.contains(d) ? 1 : 0;
    for (;;) {
      std::vector<Mono> std_m = cover->std_monomials(d);
      if ((long)std_m.size() < target)
        throw EngineError("build_ring: slice undershoots the semigroup");
      if ((long)std_m.size() == target) break;
      const Mono& a = std_m[0];
      const Mono& b = std_m[1];
      bool a_leads = cover->ctx().order.cmp(a, b) > 0;
      Vec bin = vec_make(cover->ctx(),
                         {VTerm{0, a_leads ? a : b, 1},
                          VTerm{0, a_leads ? b : a, -1}});
      rels.push_back(bin);
      cover = std::make_unique<GradedPolyRing>(sg_names, S.gens,
                                               std::vector<Vec>(rels), field,
                                               opt);
    }
  }

  std::vector<int64_t> weights = S.gens;
  weights.insert(weights.end(), extra_weights.begin(), extra_weights.end());
  std::vector<Vec> padded = rels;
  for (Vec& r : padded)
    for (VTerm& tm : r.t) tm.m.e.resize(names.size(), 0);

  auto R = std::make_shared<GradedPolyRing>(names, weights, padded, field, opt);
  R->semigroup =
      SemigroupInfo{S.gens, S.frobenius, S.pf, (int)extra_vars.size()};
  return R;
}

std::optional<Vec> t_power(const GradedPolyRing& R, int64_t e) {
  if (!R.semigroup)
    throw EngineError("t_power: ring carries no semigroup data");
  const auto& sg = *R.semigroup;
  if (e < 0) return std::nullopt;
  if (e == 0) return poly_one(R.ctx());

  const int64_t f = sg.frobenius;
  std::vector<char> reach;
  if (f >= 0) reach = reach_table(sg.gens, f + 1);
  auto member = [&](int64_t d) {
    if (d < 0) return false;
    if (d > f) return true;
    return reach[(size_t)d] != 0;
  };
  if (!member(e)) return std::nullopt;

  Mono m((size_t)R.nvars());
  int64_t remaining = e;
  while (remaining > 0) {
    bool advanced = false;
    for (size_t i = sg.gens.size(); i-- > 0;) {
      int64_t g = sg.gens[i];
      if (g <= remaining && member(remaining - g)) {
        m.e[i] += 1;
        remaining -= g;
        advanced = true;
        break;
      }
    }
    if (!advanced)
      throw EngineError("t_power: greedy factorization stalled");
  }
  return R.nf(vec_make(R.ctx(), {VTerm{0, m, 1}}));
}

}  // namespace gradus
