#include "gradus/buchberger.hpp"

#include <algorithm>
#include <cstdlib>

namespace gradus {

long gb_default_budget() {
  static long v = [] {
    if (const char* e = std::getenv("GRADUS_BUDGET")) {
      long b = std::atol(e);
      if (b > 0) return b;
    }
    return 200000L;
  }();
  return v;
}

namespace {
struct PairLater {
  template <class P>
  bool operator()(const P& x, const P& y) const {
    if (x.deg != y.deg) return x.deg > y.deg;
    if (x.i != y.i) return x.i > y.i;
    return x.j > y.j;
  }
};
}  // namespace

Buchberger::Buchberger(const RingCtx& ctx, int rank, std::vector<int64_t> twists,
                       GBOptions opt)
    : ctx_(ctx), rank_(rank), twists_(std::move(twists)), opt_(opt),
      by_pos_(rank) {
  budget_ = opt_.budget > 0 ? opt_.budget : gb_default_budget();
  if ((int)twists_.size() != rank_) throw EngineError("twist/rank mismatch");
}

void Buchberger::add_input(const Vec& v) {
  if (v.is_zero()) return;
  if (!vec_is_homogeneous(ctx_, v, twists_))
    throw EngineError("Groebner input is not homogeneous");
  Vec r = reduce(v);  // collapse repeated/dependent generators early
  if (!r.is_zero()) append_basis(std::move(r));
}

void Buchberger::append_basis(Vec v) {
  if (v.lead().c != 1) v = vec_monic(ctx_, v);
  int idx = (int)basis_.size();
  by_pos_[v.lead().pos].push_back(idx);
  basis_.push_back(std::move(v));
  for (int k : by_pos_[basis_[idx].lead().pos])
    if (k != idx) enqueue(k, idx);
}

void Buchberger::enqueue(int i, int j) {
  const Vec& a = basis_[i];
  const Vec& b = basis_[j];
  Pair p;
  p.i = i;
  p.j = j;
  p.lcm = mono_lcm(a.lead().m, b.lead().m);
  p.deg = weighted_deg(p.lcm, ctx_.weights) + twists_[a.lead().pos];
  queue_.push_back(std::move(p));
  std::push_heap(queue_.begin(), queue_.end(), PairLater{});
}

bool Buchberger::chain_criterion(const Pair& p) const {
  int32_t pos = basis_[p.i].lead().pos;
  for (int k : by_pos_[pos]) {
    if (k == p.i || k == p.j) continue;
    const Vec& g = basis_[k];
    if (!mono_divides(g.lead().m, p.lcm)) continue;
    if (mono_lcm(basis_[p.i].lead().m, g.lead().m) == p.lcm) continue;
    if (mono_lcm(basis_[p.j].lead().m, g.lead().m) == p.lcm) continue;
    return true;
  }
  return false;
}

int Buchberger::find_reducer(const VTerm& lt) const {
  for (int k : by_pos_[lt.pos])
    if (mono_divides(basis_[k].lead().m, lt.m)) return k;
  return -1;
}

Vec Buchberger::reduce(const Vec& v) const {
  Vec rem;
  Vec cur = v;
  while (!cur.is_zero()) {
    const VTerm& lt = cur.lead();
    int red = find_reducer(lt);
    if (red < 0) {
      rem.t.push_back(lt);
      cur.t.erase(cur.t.begin());
      continue;
    }
    cur = vec_sub_mul(ctx_, cur, lt.c, mono_quot(lt.m, basis_[red].lead().m),
                      basis_[red]);
  }
  return rem;
}

void Buchberger::run() {
  bool coprime_ok = rank_ == 1;
  while (!queue_.empty()) {
    std::pop_heap(queue_.begin(), queue_.end(), PairLater{});
    Pair p = std::move(queue_.back());
    queue_.pop_back();
    if (coprime_ok && mono_coprime(basis_[p.i].lead().m, basis_[p.j].lead().m))
      continue;
    if (chain_criterion(p)) continue;
    if (++pairs_done_ > budget_)
      throw BudgetExceeded("S-pair budget exceeded (" + std::to_string(budget_) +
                           "); raise GRADUS_BUDGET or simplify the input");
    Mono ui = mono_quot(p.lcm, basis_[p.i].lead().m);
    Mono uj = mono_quot(p.lcm, basis_[p.j].lead().m);
    Vec s = vec_sub_mul(ctx_, vec_mul_term(ctx_, basis_[p.i], mpq_class(1), ui),
                        mpq_class(1), uj, basis_[p.j]);
    Vec r = reduce(s);
    if (!r.is_zero()) {
      int32_t lp = r.lead().pos;
      append_basis(std::move(r));
      if (opt_.stop_at_lead_pos >= 0 && lp >= opt_.stop_at_lead_pos) {
        stopped_early_ = true;
        return;
      }
    }
  }
}

std::vector<Vec> Buchberger::reduced_basis() const {
  std::vector<int> keep;
  for (int i = 0; i < (int)basis_.size(); ++i) {
    bool redundant = false;
    for (int j = 0; j < (int)basis_.size() && !redundant; ++j) {
      if (i == j) continue;
      const VTerm& li = basis_[i].lead();
      const VTerm& lj = basis_[j].lead();
      if (li.pos != lj.pos || !mono_divides(lj.m, li.m)) continue;
      if (lj.m == li.m) {
        if (j < i) redundant = true;  // equal leads: first one wins
      } else {
        redundant = true;
      }
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<Vec> out;
  for (int i : keep) {
    // tail-reduce against the other survivors (their leads are pairwise
    // non-divisible, so the lead of i survives unchanged)
    Vec rem;
    Vec v = basis_[i];
    while (!v.is_zero()) {
      const VTerm& lt = v.lead();
      int red = -1;
      for (int j : keep) {
        if (j == i) continue;
        const VTerm& bl = basis_[j].lead();
        if (bl.pos == lt.pos && mono_divides(bl.m, lt.m)) {
          red = j;
          break;
        }
      }
      if (red < 0) {
        rem.t.push_back(lt);
        v.t.erase(v.t.begin());
      } else {
        v = vec_sub_mul(ctx_, v, lt.c, mono_quot(lt.m, basis_[red].lead().m),
                        basis_[red]);
      }
    }
    out.push_back(vec_monic(ctx_, rem));
  }
  std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) {
    return vterm_cmp(ctx_.order, a.lead().pos, a.lead().m, b.lead().pos,
                     b.lead().m) < 0;
  });
  return out;
}

}  // namespace gradus
