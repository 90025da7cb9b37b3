#pragma once
#include <cstdint>
#include <vector>

#include "gradus/poly.hpp"

namespace gradus {

long gb_default_budget();  // env GRADUS_BUDGET, else 200000

struct GBOptions {
  long budget = -1;  // S-pairs processed; -1 = default
  /* When >= 0: run() returns as soon as an S-pair remainder enters the basis
     with leading position >= this value. Used by existence-only kernel
     probes (a remainder there is a certified nonzero tag-block element);
     after an early stop the basis is not a Groebner basis. */
  int32_t stop_at_lead_pos = -1;
};

/* Buchberger driver over a free module (RingCtx)^rank under the
   position-over-term order (lower position dominates; ties by the ring's
   monomial order). Inputs must be homogeneous w.r.t. `twists`. S-pairs are
   selected smallest degree first, ties by pair index; the chain criterion is
   always applied, the coprime criterion only on rank-1 runs (it is not valid
   for modules). Exceeding the budget throws BudgetExceeded; results are
   never silently truncated.

   Syzygies and kernels are obtained by running this driver on tag-augmented
   inputs (see groebner.hpp): the position-over-term order eliminates the
   leading block, so basis elements supported purely on tag positions form a
   Groebner basis of the syzygy module. That route needs no tracking and no
   extra completeness assumptions. */
class Buchberger {
 public:
  Buchberger(const RingCtx& ctx, int rank, std::vector<int64_t> twists,
             GBOptions opt = {});

  void add_input(const Vec& v);  // zero vectors are ignored
  void run();                    // process all queued pairs

  // full normal form against the current basis (valid after run())
  Vec reduce(const Vec& v) const;
  bool is_member(const Vec& v) const { return reduce(v).is_zero(); }

  // canonical reduced basis: minimized, tail-reduced, monic, sorted
  std::vector<Vec> reduced_basis() const;
  const std::vector<Vec>& raw_basis() const { return basis_; }

  long pairs_processed() const { return pairs_done_; }
  bool stopped_early() const { return stopped_early_; }

 private:
  struct Pair {
    int64_t deg;
    int i, j;
    Mono lcm;
  };

  const RingCtx& ctx_;
  int rank_;
  std::vector<int64_t> twists_;
  GBOptions opt_;
  long budget_;
  std::vector<Vec> basis_;
  std::vector<std::vector<int>> by_pos_;  // leading position -> basis indices
  std::vector<Pair> queue_;               // heap, smallest degree on top
  long pairs_done_ = 0;
  bool stopped_early_ = false;

  void enqueue(int i, int j);
  bool chain_criterion(const Pair& p) const;
  int find_reducer(const VTerm& lt) const;
  void append_basis(Vec v);
};

}  // namespace gradus
