#include "gradus/ring.hpp"

#include <algorithm>
#include <set>

namespace gradus {

GradedPolyRing::GradedPolyRing(std::vector<std::string> vars,
                               std::vector<int64_t> weights,
                               std::vector<Vec> relations, CoeffField field,
                               GBOptions opt) {
  if (vars.empty()) throw EngineError("ring needs at least one variable");
  if (vars.size() != weights.size())
    throw EngineError("variable/weight count mismatch");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) throw EngineError("empty variable name");
    if (!seen.insert(v).second)
      throw EngineError("duplicate variable name: " + v);
  }
  for (size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0)
      throw EngineError("weight of " + vars[i] + " must be positive, got " +
                        std::to_string(weights[i]));
  }
  ctx_.vars = std::move(vars);
  ctx_.weights = weights;
  ctx_.order = MonoOrder{MonoOrder::Kind::wgrevlex, weights, 0};
  ctx_.field = field;

  std::vector<int64_t> rank1_twist{0};
  for (const auto& r : relations) {
    if (r.is_zero()) continue;
    if (!vec_is_homogeneous(ctx_, r, rank1_twist)) {
      // name two terms of different weighted degree
      int64_t d0 = weighted_deg(r.t.front().m, ctx_.weights);
      std::string bad;
      for (const auto& t : r.t) {
        if (weighted_deg(t.m, ctx_.weights) != d0) {
          bad = mono_str(ctx_, t.m);
          break;
        }
      }
      throw EngineError("relation " + poly_str(ctx_, r) +
                        " is not homogeneous (term " + bad +
                        " breaks the weighted degree)");
    }
    relations_.push_back(r);
  }

  rel_engine_ = std::make_unique<Buchberger>(ctx_, 1, rank1_twist, opt);
  for (const auto& r : relations_) rel_engine_->add_input(r);
  rel_engine_->run();
  rel_gb_ = rel_engine_->reduced_basis();
  if (!rel_gb_.empty() && rel_gb_.front().nterms() == 1 &&
      rel_gb_.front().lead().m.is_one())
    throw EngineError("relations generate the unit ideal");
}

Vec GradedPolyRing::nf(const Vec& p) const { return rel_engine_->reduce(p); }

Vec GradedPolyRing::nf_vec(const Vec& v) const {
  // split by position, reduce each polynomial part, reassemble
  std::vector<VTerm> out;
  size_t i = 0;
  while (i < v.t.size()) {
    size_t j = i;
    int32_t pos = v.t[i].pos;
    Vec part;
    while (j < v.t.size() && v.t[j].pos == pos) {
      part.t.push_back({0, v.t[j].m, v.t[j].c});
      ++j;
    }
    Vec red = nf(part);
    for (const auto& t : red.t) out.push_back({pos, t.m, t.c});
    i = j;
  }
  Vec r;
  r.t = std::move(out);
  return r;  // order within/between positions is preserved by construction
}

bool GradedPolyRing::eq(const Vec& a, const Vec& b) const {
  return nf(vec_sub(ctx_, a, b)).is_zero();
}

Vec GradedPolyRing::element(const std::string& expr) const {
  return nf(parse_poly(ctx_, expr));
}

namespace {
void enum_monos(const std::vector<int64_t>& w, size_t i, int64_t rem, Mono& cur,
                std::vector<Mono>& out) {
  if (i + 1 == w.size()) {
    if (rem % w[i] == 0) {
      cur.e[i] = (int32_t)(rem / w[i]);
      out.push_back(cur);
      cur.e[i] = 0;
    }
    return;
  }
  for (int64_t e = 0; e * w[i] <= rem; ++e) {
    cur.e[i] = (int32_t)e;
    enum_monos(w, i + 1, rem - e * w[i], cur, out);
  }
  cur.e[i] = 0;
}
}  // namespace

std::vector<Mono> monomials_of_weight(const RingCtx& ctx, int64_t deg) {
  std::vector<Mono> all;
  if (deg < 0) return all;
  Mono cur((size_t)ctx.nvars());
  enum_monos(ctx.weights, 0, deg, cur, all);
  return all;
}

std::vector<Mono> GradedPolyRing::std_monomials(int64_t deg) const {
  std::vector<Mono> all = monomials_of_weight(ctx_, deg);
  std::vector<Mono> out;
  for (const auto& m : all) {
    bool reducible = false;
    for (const auto& g : rel_gb_) {
      if (mono_divides(g.lead().m, m)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [&](const Mono& a, const Mono& b) {
    return ctx_.order.cmp(a, b) > 0;
  });
  return out;
}

long GradedPolyRing::dim_slice(int64_t deg) const {
  return (long)std_monomials(deg).size();
}

std::vector<long> GradedPolyRing::hilbert_function(int64_t degree_bound) const {
  std::vector<long> h;
  for (int64_t d = 0; d <= degree_bound; ++d) h.push_back(dim_slice(d));
  return h;
}

std::vector<Vec> GradedPolyRing::maximal_ideal_gens() const {
  std::vector<Vec> out;
  for (int i = 0; i < ctx_.nvars(); ++i) out.push_back(poly_var(ctx_, i));
  return out;
}

int64_t GradedPolyRing::min_weight() const {
  return *std::min_element(ctx_.weights.begin(), ctx_.weights.end());
}

std::shared_ptr<GradedPolyRing> make_ring(std::vector<std::string> vars,
                                          std::vector<int64_t> weights,
                                          const std::vector<std::string>& relation_exprs,
                                          CoeffField field, GBOptions opt) {
  RingCtx tmp;
  tmp.vars = vars;
  tmp.weights = weights;
  tmp.order = MonoOrder{MonoOrder::Kind::wgrevlex, weights, 0};
  tmp.field = field;
  std::vector<Vec> rels;
  for (const auto& e : relation_exprs) rels.push_back(parse_poly(tmp, e));
  return std::make_shared<GradedPolyRing>(std::move(vars), std::move(weights),
                                          std::move(rels), field, opt);
}

}  // namespace gradus
