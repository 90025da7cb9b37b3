#include "gradus/fpmodule.hpp"

#include <algorithm>
#include <map>

namespace gradus {

namespace {

// polynomial entry of a column at one position, as a rank-1 element
Vec poly_at(const Vec& col, int32_t pos) {
  Vec out;
  for (const auto& t : col.t)
    if (t.pos == pos) out.t.push_back(VTerm{0, t.m, t.c});
  return out;
}

// a - q * b for a rank-1 polynomial q
Vec vec_sub_poly_mul(const RingCtx& ctx, Vec a, const Vec& q, const Vec& b) {
  for (const auto& t : q.t) a = vec_sub_mul(ctx, a, t.c, t.m, b);
  return a;
}

std::optional<int64_t> degree_of(const FreeModule& F, const Vec& v) {
  return vec_degree_checked(F.R->ctx(), v, F.twists);
}

}  // namespace

FPModule fp_module(FreeModule F0, FreeModule F1, std::vector<Vec> cols) {
  if ((int)cols.size() != F1.rank())
    throw EngineError("presentation column count != relation rank");
  if (F0.R != F1.R) throw EngineError("presentation spans two rings");
  FPModule M{std::move(F0), std::move(F1), {}};
  for (size_t j = 0; j < cols.size(); ++j) {
    Vec n = M.F0.R->nf_vec(cols[j]);
    auto d = degree_of(M.F0, n);
    if (d && *d != M.F1.twists[j])
      throw EngineError("presentation column " + std::to_string(j) +
                        " has degree " + std::to_string(*d) +
                        ", twist says " + std::to_string(M.F1.twists[j]));
    M.cols.push_back(std::move(n));
  }
  return M;
}

FPModule fp_free(std::shared_ptr<const GradedPolyRing> R,
                 std::vector<int64_t> twists) {
  FPModule M{free_module(R, std::move(twists)), free_module(R, {}), {}};
  M.minimal = true;
  return M;
}

FPModule fp_zero(std::shared_ptr<const GradedPolyRing> R) {
  return fp_free(std::move(R), {});
}

FPModule fp_cyclic(std::shared_ptr<const GradedPolyRing> R,
                   const std::vector<Vec>& ideal_gens, GBOptions opt) {
  (void)opt;
  std::vector<Vec> cols;
  std::vector<int64_t> tw;
  for (const auto& g : ideal_gens) {
    Vec n = R->nf(g);
    if (n.is_zero()) continue;
    auto d = vec_degree_checked(R->ctx(), n, {0});
    cols.push_back(std::move(n));
    tw.push_back(*d);
  }
  return fp_module(free_module(R, {0}), free_module(R, std::move(tw)),
                   std::move(cols));
}

FPModule fp_k(std::shared_ptr<const GradedPolyRing> R, GBOptions opt) {
  return fp_cyclic(R, R->maximal_ideal_gens(), opt);
}

FPModule fp_ideal(std::shared_ptr<const GradedPolyRing> R,
                  const std::vector<Vec>& ideal_gens, GBOptions opt) {
  std::vector<Vec> gens;
  std::vector<int64_t> tw;
  for (const auto& g : ideal_gens) {
    Vec n = R->nf(g);
    if (n.is_zero()) continue;
    tw.push_back(*vec_degree_checked(R->ctx(), n, {0}));
    gens.push_back(std::move(n));
  }
  if (gens.empty()) return fp_zero(R);
  Submodule S = make_submodule(free_module(R, {0}), gens);
  Submodule Z = syzygies(S, opt);
  std::vector<int64_t> rtw;
  for (const auto& g : Z.gens)
    rtw.push_back(*vec_degree_checked(R->ctx(), g, Z.F.twists));
  return fp_module(Z.F, free_module(R, std::move(rtw)), Z.gens);
}

std::vector<int> minimize_generators(const Submodule& S, GBOptions opt) {
  const RingCtx& ctx = S.F.R->ctx();
  Buchberger engine(ctx, S.F.rank(), S.F.twists, opt);
  // span to test against starts as m*K + relations
  for (int v = 0; v < ctx.nvars(); ++v) {
    Mono xm((size_t)ctx.nvars());
    xm.e[(size_t)v] = 1;
    for (const auto& g : S.gens)
      engine.add_input(vec_mul_term(ctx, g, mpq_class(1), xm));
  }
  add_quotient_relations(engine, *S.F.R, S.F.rank());
  engine.run();
  std::vector<int> order(S.gens.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    auto da = degree_of(S.F, S.gens[(size_t)a]);
    auto db = degree_of(S.F, S.gens[(size_t)b]);
    return da.value_or(0) < db.value_or(0);
  });
  std::vector<int> kept;
  for (int idx : order) {
    const Vec& g = S.gens[(size_t)idx];
    if (g.is_zero()) continue;
    if (engine.is_member(g)) continue;
    kept.push_back(idx);
    engine.add_input(g);
    engine.run();
  }
  return kept;
}

namespace {

/* Same greedy prune, but membership is taken modulo an extra denominator
   submodule (for subquotients numerator/denominator). */
std::vector<int> minimize_generators_modulo(const FreeModule& F,
                                            const std::vector<Vec>& gens,
                                            const std::vector<Vec>& denom,
                                            GBOptions opt) {
  const RingCtx& ctx = F.R->ctx();
  Buchberger engine(ctx, F.rank(), F.twists, opt);
  for (int v = 0; v < ctx.nvars(); ++v) {
    Mono xm((size_t)ctx.nvars());
    xm.e[(size_t)v] = 1;
    for (const auto& g : gens)
      engine.add_input(vec_mul_term(ctx, g, mpq_class(1), xm));
  }
  for (const auto& u : denom) engine.add_input(u);
  add_quotient_relations(engine, *F.R, F.rank());
  engine.run();
  std::vector<int> order(gens.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    auto da = degree_of(F, gens[(size_t)a]);
    auto db = degree_of(F, gens[(size_t)b]);
    return da.value_or(0) < db.value_or(0);
  });
  std::vector<int> kept;
  for (int idx : order) {
    const Vec& g = gens[(size_t)idx];
    if (g.is_zero()) continue;
    if (engine.is_member(g)) continue;
    kept.push_back(idx);
    engine.add_input(g);
    engine.run();
  }
  return kept;
}

}  // namespace

FPModule minimal_presentation(const FPModule& M, GBOptions opt) {
  if (M.minimal) return M;
  const RingCtx& ctx = M.ring()->ctx();
  std::vector<int64_t> tw0 = M.F0.twists;
  std::vector<int64_t> tw1 = M.F1.twists;
  std::vector<Vec> cols = M.cols;

  // unit pivots: first (row, column) with a constant entry, to fixpoint
  for (;;) {
    int pp = -1, pj = -1;
    mpq_class pc;
    for (int p = 0; p < (int)tw0.size() && pp < 0; ++p) {
      for (int j = 0; j < (int)tw1.size(); ++j) {
        Vec e = poly_at(cols[(size_t)j], p);
        if (!e.is_zero() && e.lead().m.is_one()) {
          pp = p;
          pj = j;
          pc = e.lead().c;  // e is the constant pc (homogeneous degree 0)
          break;
        }
      }
    }
    if (pp < 0) break;
    Vec pivot_col = cols[(size_t)pj];
    for (int l = 0; l < (int)tw1.size(); ++l) {
      if (l == pj) continue;
      Vec e = poly_at(cols[(size_t)l], pp);
      if (e.is_zero()) continue;
      Vec q = vec_scale(ctx, e, ctx.field.div(mpq_class(1), pc));
      cols[(size_t)l] =
          M.ring()->nf_vec(vec_sub_poly_mul(ctx, cols[(size_t)l], q, pivot_col));
    }
    cols.erase(cols.begin() + pj);
    tw1.erase(tw1.begin() + pj);
    for (auto& c : cols) {
      Vec out;
      for (const auto& t : c.t) {
        if (t.pos == pp) continue;  // now only the deleted column hit row pp
        out.t.push_back(VTerm{t.pos > pp ? t.pos - 1 : t.pos, t.m, t.c});
      }
      c = out;
    }
    tw0.erase(tw0.begin() + pp);
  }

  FreeModule F0 = free_module(M.ring(), tw0);
  Submodule S = make_submodule(F0, cols);  // drops zero columns, re-NFs
  std::vector<int> kept = minimize_generators(S, opt);
  std::vector<Vec> mcols;
  std::vector<int64_t> mtw;
  for (int idx : kept) {
    mcols.push_back(S.gens[(size_t)idx]);
    mtw.push_back(*degree_of(F0, S.gens[(size_t)idx]));
  }
  FPModule out = fp_module(F0, free_module(M.ring(), mtw), mcols);
  out.minimal = true;
  return out;
}

bool is_zero_module(const FPModule& M, GBOptions opt) {
  if (M.gens() == 0) return true;
  auto h = groebner(Submodule{M.F0, M.cols}, opt);
  for (int p = 0; p < M.gens(); ++p) {
    Vec e;
    e.t.push_back(VTerm{(int32_t)p, Mono((size_t)M.ring()->nvars()),
                        mpq_class(1)});
    if (!h->member(e)) return false;
  }
  return true;
}

const MinimalResolution& resolve(const FPModule& M, int steps,
                                 bool certify_end, GBOptions opt) {
  MinimalResolution& res = *M.cache;
  if (res.F.empty()) {
    FPModule Mm = minimal_presentation(M, opt);
    if (Mm.rels() == 0) {
      res.F = {Mm.F0};
      res.d = {{}};
      res.terminated = true;
    } else {
      res.F = {Mm.F0, Mm.F1};
      res.d = {{}, Mm.cols};
    }
  }
  while (!res.terminated &&
         (res.steps() < steps || (certify_end && res.steps() == steps))) {
    int i = res.steps();
    Submodule K = kernel_of_map(res.F[(size_t)i], res.F[(size_t)i - 1],
                                res.d[(size_t)i], opt);
    std::vector<int> kept = minimize_generators(K, opt);
    if (kept.empty()) {
      res.terminated = true;
      break;
    }
    std::vector<Vec> cols;
    std::vector<int64_t> tw;
    for (int idx : kept) {
      cols.push_back(K.gens[(size_t)idx]);
      tw.push_back(*degree_of(res.F[(size_t)i], K.gens[(size_t)idx]));
    }
    res.F.push_back(free_module(M.ring(), tw));
    res.d.push_back(std::move(cols));
    if (certify_end && res.steps() == steps + 1) break;
  }
  return res;
}

FPModule syzygy(const FPModule& M, int n, GBOptions opt) {
  if (n < 0) throw EngineError("syzygy index must be >= 0");
  if (n == 0) return minimal_presentation(M, opt);
  const MinimalResolution& res = resolve(M, n + 1, false, opt);
  if (res.terminated && res.steps() <= n) {
    int s = res.steps();
    if (n > s) return fp_zero(M.ring());
    FPModule out = fp_free(M.ring(), res.F[(size_t)s].twists);
    return out;
  }
  FPModule out = fp_module(res.F[(size_t)n], res.F[(size_t)n + 1],
                           res.d[(size_t)n + 1]);
  out.minimal = true;
  return out;
}

FPModule transpose(const FPModule& M, GBOptions opt) {
  FPModule Mm = minimal_presentation(M, opt);
  int r0 = Mm.gens();
  int r1 = Mm.rels();
  std::vector<int64_t> tw_target;  // F1^* positions
  for (int j = 0; j < r1; ++j) tw_target.push_back(-Mm.F1.twists[(size_t)j]);
  std::vector<int64_t> tw_source;  // F0^* positions
  for (int p = 0; p < r0; ++p) tw_source.push_back(-Mm.F0.twists[(size_t)p]);
  std::vector<Vec> tcols((size_t)r0);
  for (int j = 0; j < r1; ++j)
    for (const auto& t : Mm.cols[(size_t)j].t)
      tcols[(size_t)t.pos].t.push_back(VTerm{(int32_t)j, t.m, t.c});
  for (auto& c : tcols) c = vec_make(M.ring()->ctx(), std::move(c.t));
  return fp_module(free_module(M.ring(), tw_target),
                   free_module(M.ring(), tw_source), std::move(tcols));
}

FPModule present_subquotient(const FreeModule& W,
                             const std::vector<Vec>& numerator,
                             const std::vector<Vec>& denominator,
                             GBOptions opt) {
  std::vector<Vec> num;
  for (const auto& v : numerator) {
    Vec n = W.R->nf_vec(v);
    if (!n.is_zero()) num.push_back(std::move(n));
  }
  std::vector<Vec> den;
  for (const auto& v : denominator) {
    Vec n = W.R->nf_vec(v);
    if (!n.is_zero()) den.push_back(std::move(n));
  }
  std::vector<int> kept = minimize_generators_modulo(W, num, den, opt);
  std::vector<Vec> gens;
  std::vector<int64_t> tw;
  for (int idx : kept) {
    gens.push_back(num[(size_t)idx]);
    tw.push_back(*degree_of(W, num[(size_t)idx]));
  }
  FreeModule F0 = free_module(W.R, tw);
  if (gens.empty()) return fp_zero(W.R);
  Submodule rel = kernel_modulo(F0, W, gens, den, opt);
  std::vector<int> rkept = minimize_generators(rel, opt);
  std::vector<Vec> cols;
  std::vector<int64_t> rtw;
  for (int idx : rkept) {
    cols.push_back(rel.gens[(size_t)idx]);
    rtw.push_back(*degree_of(F0, rel.gens[(size_t)idx]));
  }
  FPModule out = fp_module(F0, free_module(W.R, rtw), cols);
  out.minimal = true;
  return out;
}

FPModule hom_module(const FPModule& M, const FPModule& N, GBOptions opt) {
  if (M.ring() != N.ring()) throw EngineError("hom over different rings");
  FPModule Mm = minimal_presentation(M, opt);
  FPModule Nm = minimal_presentation(N, opt);
  int r0 = Mm.gens(), r1 = Mm.rels();
  int g0 = Nm.gens(), g1 = Nm.rels();
  auto R = M.ring();
  // W = Hom(F0, G0): slot (i, a) at position i*g0 + a
  std::vector<int64_t> wt;
  for (int i = 0; i < r0; ++i)
    for (int a = 0; a < g0; ++a)
      wt.push_back(Nm.F0.twists[(size_t)a] - Mm.F0.twists[(size_t)i]);
  FreeModule W = free_module(R, wt);
  // V = Hom(F1, G0)
  std::vector<int64_t> vt;
  for (int j = 0; j < r1; ++j)
    for (int a = 0; a < g0; ++a)
      vt.push_back(Nm.F0.twists[(size_t)a] - Mm.F1.twists[(size_t)j]);
  FreeModule V = free_module(R, vt);
  // Phi = Hom(A, G0): slot (i,a) -> sum_j A_{i,j} at V-slot (j,a)
  std::vector<Vec> phi;
  for (int i = 0; i < r0; ++i)
    for (int a = 0; a < g0; ++a) {
      Vec col;
      for (int j = 0; j < r1; ++j)
        for (const auto& t : Mm.cols[(size_t)j].t)
          if (t.pos == i)
            col.t.push_back(VTerm{(int32_t)(j * g0 + a), t.m, t.c});
      phi.push_back(vec_make(R->ctx(), std::move(col.t)));
    }
  // B embedded in each V block
  std::vector<Vec> bv;
  for (int j = 0; j < r1; ++j)
    for (int b = 0; b < g1; ++b) {
      Vec col;
      for (const auto& t : Nm.cols[(size_t)b].t)
        col.t.push_back(VTerm{(int32_t)(j * g0 + t.pos), t.m, t.c});
      bv.push_back(vec_make(R->ctx(), std::move(col.t)));
    }
  Submodule K = kernel_modulo(W, V, phi, bv, opt);
  // denominator inside W: B embedded in each W block
  std::vector<Vec> bw;
  for (int i = 0; i < r0; ++i)
    for (int b = 0; b < g1; ++b) {
      Vec col;
      for (const auto& t : Nm.cols[(size_t)b].t)
        col.t.push_back(VTerm{(int32_t)(i * g0 + t.pos), t.m, t.c});
      bw.push_back(vec_make(R->ctx(), std::move(col.t)));
    }
  return present_subquotient(W, K.gens, bw, opt);
}

FPModule tensor(const FPModule& M, const FPModule& N, GBOptions opt) {
  if (M.ring() != N.ring()) throw EngineError("tensor over different rings");
  FPModule Mm = minimal_presentation(M, opt);
  FPModule Nm = minimal_presentation(N, opt);
  int r0 = Mm.gens(), r1 = Mm.rels();
  int g0 = Nm.gens(), g1 = Nm.rels();
  auto R = M.ring();
  std::vector<int64_t> tt;
  for (int i = 0; i < r0; ++i)
    for (int a = 0; a < g0; ++a)
      tt.push_back(Mm.F0.twists[(size_t)i] + Nm.F0.twists[(size_t)a]);
  FreeModule T0 = free_module(R, tt);
  std::vector<Vec> cols;
  std::vector<int64_t> ct;
  for (int j = 0; j < r1; ++j)
    for (int a = 0; a < g0; ++a) {
      Vec col;
      for (const auto& t : Mm.cols[(size_t)j].t)
        col.t.push_back(VTerm{(int32_t)(t.pos * g0 + a), t.m, t.c});
      cols.push_back(vec_make(R->ctx(), std::move(col.t)));
      ct.push_back(Mm.F1.twists[(size_t)j] + Nm.F0.twists[(size_t)a]);
    }
  for (int i = 0; i < r0; ++i)
    for (int b = 0; b < g1; ++b) {
      Vec col;
      for (const auto& t : Nm.cols[(size_t)b].t)
        col.t.push_back(VTerm{(int32_t)(i * g0 + t.pos), t.m, t.c});
      cols.push_back(vec_make(R->ctx(), std::move(col.t)));
      ct.push_back(Nm.F1.twists[(size_t)b] + Mm.F0.twists[(size_t)i]);
    }
  FPModule T = fp_module(T0, free_module(R, ct), cols);
  return minimal_presentation(T, opt);
}

std::vector<long> module_hilbert(const FPModule& M, int64_t bound,
                                 GBOptions opt) {
  std::vector<long> h;
  if (M.gens() == 0) {
    h.assign((size_t)bound + 1, 0);
    return h;
  }
  auto g = groebner(Submodule{M.F0, M.cols}, opt);
  for (int64_t d = 0; d <= bound; ++d) h.push_back(g->slice_dim(d));
  return h;
}

}  // namespace gradus
