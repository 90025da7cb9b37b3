#include "gradus/idealkit.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "gradus/linalg.hpp"
#include "gradus/ring.hpp"

namespace gradus {

namespace {

void require_proper(const Ideal& I, const char* op) {
  if (I.is_unit) throw EngineError(std::string(op) + ": ideal must be proper");
}

void require_nonzero(const Ideal& I, const char* op) {
  if (I.gens.empty())
    throw EngineError(std::string(op) + ": ideal must be nonzero");
}

FreeModule rank1(std::shared_ptr<const GradedPolyRing> R) {
  return free_module(R, {0});
}

std::shared_ptr<GBHandle> ideal_gb(const Ideal& I, GBOptions opt) {
  return groebner(make_submodule(rank1(I.R), I.gens), opt);
}

std::string mono_key(const Mono& m) {
  std::string s;
  for (int e : m.e) {
    s += std::to_string(e);
    s += ',';
  }
  return s;
}

std::string vec_key(const Vec& v) {
  std::string s;
  for (const auto& tm : v.t) {
    s += std::to_string(tm.pos);
    s += ':';
    s += mono_key(tm.m);
    s += tm.c.get_str();
    s += ';';
  }
  return s;
}

}  // namespace

Ideal make_ideal(std::shared_ptr<const GradedPolyRing> R,
                 std::vector<Vec> gens) {
  Ideal I;
  I.R = R;
  for (auto& g : gens) {
    Vec v = R->nf_vec(g);
    if (v.is_zero()) continue;
    auto d = vec_degree_checked(R->ctx(), v, {0});
    for (const auto& tm : v.t)
      if (tm.pos != 0)
        throw EngineError("ideal generators must be ring elements");
    if (*d == 0) {
      I.is_unit = true;
      I.gens = {R->element("1")};
      return I;
    }
    I.gens.push_back(std::move(v));
  }
  return I;
}

Ideal maximal_ideal(std::shared_ptr<const GradedPolyRing> R) {
  return make_ideal(R, R->maximal_ideal_gens());
}

bool ideal_contains(const Ideal& I, const Vec& g, GBOptions opt) {
  Vec v = I.R->nf_vec(g);
  if (v.is_zero()) return true;
  if (I.gens.empty()) return false;
  return ideal_gb(I, opt)->member(v);
}

bool ideal_eq(const Ideal& I, const Ideal& J, GBOptions opt) {
  if (I.R != J.R) throw EngineError("ideal comparison across rings");
  if (I.is_unit || J.is_unit) return I.is_unit == J.is_unit;
  auto contains_all = [&](const Ideal& big, const Ideal& small) {
    if (small.gens.empty()) return true;
    if (big.gens.empty()) return false;
    auto h = ideal_gb(big, opt);
    for (const auto& g : small.gens)
      if (!h->member(g)) return false;
    return true;
  };
  return contains_all(I, J) && contains_all(J, I);
}

Ideal ideal_product(const Ideal& A, const Ideal& B, GBOptions opt) {
  (void)opt;
  if (A.R != B.R) throw EngineError("ideal product across rings");
  if (A.is_unit) return B;
  if (B.is_unit) return A;
  const RingCtx& ctx = A.R->ctx();
  std::vector<Vec> prods;
  for (const auto& a : A.gens)
    for (const auto& b : B.gens) prods.push_back(poly_mul(ctx, a, b));
  return make_ideal(A.R, std::move(prods));
}

Ideal ideal_power(const Ideal& I, int n, GBOptions opt) {
  if (n < 1) throw EngineError("ideal power exponent must be >= 1");
  Ideal P = I;
  for (int i = 1; i < n; ++i) P = ideal_product(P, I, opt);
  return P;
}

Ideal colon(const Ideal& I, const Ideal& J, GBOptions opt) {
  if (I.R != J.R) throw EngineError("ideal colon across rings");
  auto R = I.R;
  if (J.is_unit) return make_ideal(R, I.gens);
  if (J.gens.empty()) return make_ideal(R, {R->element("1")});
  const RingCtx& ctx = R->ctx();
  // r |-> (r g_j)_j into R^t with e_j twisted by -deg g_j, modulo block
  // copies of I: the kernel is exactly (I : J)
  std::vector<int64_t> tw;
  for (const auto& g : J.gens)
    tw.push_back(-*vec_degree_checked(ctx, g, {0}));
  FreeModule F0 = free_module(R, tw);
  std::vector<VTerm> col_terms;
  for (size_t j = 0; j < J.gens.size(); ++j)
    for (const auto& tm : J.gens[j].t)
      col_terms.push_back(VTerm{(int32_t)j, tm.m, tm.c});
  Vec col = vec_make(ctx, std::move(col_terms));
  std::vector<Vec> denom;
  for (const auto& f : I.gens)
    for (size_t j = 0; j < J.gens.size(); ++j) {
      std::vector<VTerm> terms;
      for (const auto& tm : f.t)
        terms.push_back(VTerm{(int32_t)j, tm.m, tm.c});
      denom.push_back(vec_make(ctx, std::move(terms)));
    }
  Submodule K = kernel_modulo(rank1(R), F0, {col}, denom, opt);
  return make_ideal(R, K.gens);
}

Ideal colon_maximal(const Ideal& I, GBOptions opt) {
  return colon(I, maximal_ideal(I.R), opt);
}

bool depth_zero(const Ideal& I, GBOptions opt) {
  require_proper(I, "depth_zero");
  return !ideal_eq(colon_maximal(I, opt), I, opt);
}

bool is_weakly_mfull(const Ideal& I, GBOptions opt) {
  require_proper(I, "is_weakly_mfull");
  require_nonzero(I, "is_weakly_mfull");
  Ideal m = maximal_ideal(I.R);
  Ideal mI = ideal_product(m, I, opt);
  return ideal_eq(colon(mI, m, opt), I, opt);
}

bool burch_condition(const Ideal& I, GBOptions opt) {
  require_proper(I, "burch_condition");
  require_nonzero(I, "burch_condition");
  Ideal m = maximal_ideal(I.R);
  Ideal lhs = ideal_product(m, colon_maximal(I, opt), opt);
  Ideal rhs = ideal_product(m, I, opt);
  return !ideal_eq(lhs, rhs, opt);
}

MFullVerdict is_mfull(const Ideal& I, int candidate_budget, GBOptions opt) {
  require_proper(I, "is_mfull");
  require_nonzero(I, "is_mfull");
  auto R = I.R;
  const RingCtx& ctx = R->ctx();
  MFullVerdict out;
  if (!is_weakly_mfull(I, opt)) {
    out.kind = MFullVerdict::kFalseOnCandidates;
    out.note = "not weakly m-full, which m-fullness implies";
    return out;
  }
  Ideal m = maximal_ideal(R);
  Ideal mI = ideal_product(m, I, opt);
  auto works = [&](const Vec& x) {
    Ideal xi = make_ideal(R, {x});
    if (xi.gens.empty() || xi.is_unit) return false;
    return ideal_eq(colon(mI, xi, opt), I, opt);
  };

  for (const auto& x : R->maximal_ideal_gens())
    if (works(x)) {
      out.kind = MFullVerdict::kTrue;
      out.witness = R->nf_vec(x);
      out.note = "variable witness";
      return out;
    }
  for (int64_t d = 1; d <= 12; ++d)
    for (const auto& mu : R->std_monomials(d)) {
      Vec x;
      x.t.push_back(VTerm{0, mu, mpq_class(1)});
      if (works(x)) {
        out.kind = MFullVerdict::kTrue;
        out.witness = R->nf_vec(x);
        out.note = "monomial witness";
        return out;
      }
    }

  /* Homogeneous linear candidates: combinations are only graded within a
     weight class, so draw coefficients per class of equally-weighted
     variables. Over a prime field a class is exhausted outright when small
     enough; otherwise seeded random draws. */
  int nv = ctx.nvars();
  std::map<int64_t, std::vector<int>> classes;
  for (int i = 0; i < nv; ++i) classes[ctx.weights[(size_t)i]].push_back(i);
  bool prime_field = ctx.field.tag().rfind("prime:", 0) == 0;
  long p = prime_field ? std::stol(ctx.field.tag().substr(6)) : 0;
  bool exhausted_all_linear = prime_field;
  std::mt19937 rng(0xC0FFEE);
  for (const auto& [w, vars] : classes) {
    if (vars.size() < 2) {
      // single variable classes were covered above
      continue;
    }
    auto lin = [&](const std::vector<long>& cs) {
      std::vector<VTerm> terms;
      for (size_t i = 0; i < vars.size(); ++i)
        if (cs[i] != 0) {
          Mono mu((size_t)nv);
          mu.e[(size_t)vars[i]] = 1;
          terms.push_back(VTerm{0, mu, mpq_class(cs[i])});
        }
      return vec_make(ctx, std::move(terms));
    };
    double total = 1;
    for (size_t i = 0; i < vars.size(); ++i) total *= (double)p;
    if (prime_field && total - 1 <= (double)candidate_budget) {
      std::vector<long> cs(vars.size(), 0);
      for (;;) {
        size_t i = 0;
        while (i < cs.size() && ++cs[i] == p) cs[i++] = 0;
        if (i == cs.size()) break;
        Vec x = lin(cs);
        if (!x.is_zero() && works(x)) {
          out.kind = MFullVerdict::kTrue;
          out.witness = R->nf_vec(x);
          out.note = "linear witness";
          return out;
        }
      }
    } else {
      exhausted_all_linear = false;
      for (int t = 0; t < candidate_budget; ++t) {
        std::vector<long> cs(vars.size());
        for (auto& c : cs)
          c = prime_field ? (long)(rng() % (unsigned long)p)
                          : (long)(rng() % 100) + 1;
        Vec x = lin(cs);
        if (!x.is_zero() && works(x)) {
          out.kind = MFullVerdict::kTrue;
          out.witness = R->nf_vec(x);
          out.note = "linear witness";
          return out;
        }
      }
    }
  }

  bool monomial_ideal = true;
  for (const auto& g : I.gens)
    if (g.t.size() != 1) monomial_ideal = false;
  if (R->semigroup && monomial_ideal) {
    out.kind = MFullVerdict::kFalseOnCandidates;
    out.note =
        "monomial candidates exhaust the search for a monomial ideal over a "
        "semigroup ring: graded components are one-dimensional, so any "
        "witness reduces to a monomial one";
    return out;
  }
  if (exhausted_all_linear) {
    out.kind = MFullVerdict::kFalseOnCandidates;
    out.note = "all homogeneous linear forms over the finite field failed";
    return out;
  }
  out.kind = MFullVerdict::kUnknown;
  out.note = "candidate search exhausted without a witness";
  return out;
}

std::vector<Vec> socle(const Ideal& K, GBOptions opt) {
  require_proper(K, "socle");
  auto R = K.R;
  const RingCtx& ctx = R->ctx();
  int nv = ctx.nvars();
  auto h = K.gens.empty()
               ? groebner(make_submodule(rank1(R), {}), opt)
               : ideal_gb(K, opt);
  // Artinian certificate: a pure power of every variable lies in K
  int64_t dmax = 0;
  for (int i = 0; i < nv; ++i) {
    int found = -1;
    for (int e = 1; found < 0 && e * ctx.weights[(size_t)i] <= 60; ++e) {
      Mono mu((size_t)nv);
      mu.e[(size_t)i] = e;
      Vec v;
      v.t.push_back(VTerm{0, mu, mpq_class(1)});
      if (h->member(v)) found = e;
    }
    if (found < 0)
      throw EngineError(
          "socle: quotient not certified Artinian (no pure variable power "
          "in the ideal within degree 60)");
    dmax += (int64_t)(found - 1) * ctx.weights[(size_t)i];
  }

  std::vector<Vec> out;
  const CoeffField& F = ctx.field;
  for (int64_t d = 0; d <= dmax; ++d) {
    auto basis = h->std_vectors(d);
    if (basis.empty()) continue;
    // rows: coordinates of x_j * (basis monomial) over all variables j
    std::vector<std::vector<mpq_class>> rows;
    for (int j = 0; j < nv; ++j) {
      auto target = h->std_vectors(d + ctx.weights[(size_t)j]);
      std::map<std::string, size_t> row_of;
      for (size_t r = 0; r < target.size(); ++r)
        row_of[mono_key(target[r].second)] = r;
      std::vector<std::vector<mpq_class>> block(
          target.size(), std::vector<mpq_class>(basis.size(), 0));
      Mono xj((size_t)nv);
      xj.e[(size_t)j] = 1;
      for (size_t c = 0; c < basis.size(); ++c) {
        Vec v;
        v.t.push_back(VTerm{0, basis[c].second, mpq_class(1)});
        Vec img = h->reduce(vec_mul_term(ctx, v, mpq_class(1), xj));
        for (const auto& tm : img.t) {
          auto it = row_of.find(mono_key(tm.m));
          if (it == row_of.end())
            throw EngineError("socle: reduction left a non-standard term");
          block[it->second][c] = tm.c;
        }
      }
      for (auto& r : block) rows.push_back(std::move(r));
    }
    if (rows.empty()) rows.push_back(std::vector<mpq_class>(basis.size(), 0));
    for (const auto& kv : dense_kernel(F, rows)) {
      std::vector<VTerm> terms;
      for (size_t c = 0; c < basis.size(); ++c)
        if (kv[c] != 0)
          terms.push_back(VTerm{0, basis[c].second, kv[c]});
      out.push_back(vec_make(ctx, std::move(terms)));
    }
  }
  return out;
}

IntegralWitness integral_witness_check(const Ideal& I, const Vec& r,
                                       const std::vector<Vec>& coeffs,
                                       GBOptions opt) {
  require_proper(I, "integral_witness_check");
  require_nonzero(I, "integral_witness_check");
  if (coeffs.empty())
    throw EngineError("integral_witness_check: need at least one coefficient");
  auto R = I.R;
  const RingCtx& ctx = R->ctx();
  int n = (int)coeffs.size();
  IntegralWitness out;
  out.valid = true;
  for (int i = 1; i <= n; ++i) {
    Ideal Pi = ideal_power(I, i, opt);
    if (!ideal_contains(Pi, coeffs[(size_t)i - 1], opt)) out.valid = false;
  }
  // r^n + a_1 r^{n-1} + ... + a_n
  Vec acc = R->nf_vec(r);
  std::vector<Vec> rpow{R->element("1")};  // r^0
  for (int i = 1; i <= n; ++i)
    rpow.push_back(R->nf_vec(poly_mul(ctx, rpow.back(), acc)));
  Vec sum = rpow[(size_t)n];
  for (int i = 1; i <= n; ++i)
    sum = vec_add(ctx, sum,
                  poly_mul(ctx, coeffs[(size_t)i - 1], rpow[(size_t)n - i]));
  if (!R->nf_vec(sum).is_zero()) out.valid = false;
  out.r_in_ideal = ideal_contains(I, r, opt);
  return out;
}

std::vector<Ideal> enumerate_monomial_ideals(
    std::shared_ptr<const GradedPolyRing> R, int64_t degree_bound,
    int max_gens, GBOptions opt) {
  if (degree_bound < 1 || max_gens < 1)
    throw EngineError("enumeration bounds must be positive");
  const RingCtx& ctx = R->ctx();
  std::vector<Mono> pool;
  for (int64_t d = 1; d <= degree_bound; ++d)
    for (const auto& mu : R->std_monomials(d)) pool.push_back(mu);

  std::vector<Ideal> out;
  std::set<std::string> seen;
  std::vector<int> idx;
  auto emit = [&]() {
    std::vector<Vec> gens;
    for (int i : idx) {
      Vec v;
      v.t.push_back(VTerm{0, pool[(size_t)i], mpq_class(1)});
      gens.push_back(std::move(v));
    }
    Ideal I = make_ideal(R, std::move(gens));
    if (I.gens.empty() || I.is_unit) return;
    std::string key;
    auto h = ideal_gb(I, opt);
    for (const auto& b : h->basis()) key += vec_key(b) + "|";
    if (seen.insert(key).second) out.push_back(std::move(I));
  };
  // subsets of the pool, size first, then lexicographic on indices
  for (int k = 1; k <= max_gens && k <= (int)pool.size(); ++k) {
    idx.assign((size_t)k, 0);
    for (int i = 0; i < k; ++i) idx[(size_t)i] = i;
    for (;;) {
      emit();
      int i = k - 1;
      while (i >= 0 && idx[(size_t)i] == (int)pool.size() - k + i) --i;
      if (i < 0) break;
      ++idx[(size_t)i];
      for (int j = i + 1; j < k; ++j) idx[(size_t)j] = idx[(size_t)j - 1] + 1;
    }
  }
  return out;
}

}  // namespace gradus
