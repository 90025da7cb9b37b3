#pragma once
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gradus/buchberger.hpp"
#include "gradus/poly.hpp"

namespace gradus {

/* Data attached to rings produced by the numerical-semigroup builder.
   It is what makes the canonical-module shortcut (homalg) and the
   substitution oracle (tests) possible: the ring is k[t^a : a in gens],
   tensored with free variables, and we remember the combinatorics. */
struct SemigroupInfo {
  std::vector<int64_t> gens;      // numerical semigroup generators
  int64_t frobenius = -1;         // largest gap (-1 when the semigroup is ℕ)
  std::vector<int64_t> pf;        // pseudo-Frobenius numbers, ascending
  int n_extra = 0;                // trailing free (polynomial) variables
};

/* Weighted-graded polynomial ring presented as a quotient P/J where P is a
   free polynomial ring and J is generated by weighted-homogeneous relations.
   The reduced Groebner basis of J is computed on construction; elements are
   kept in normal form against it. With all weights positive the irrelevant
   ideal (x_1..x_n) plays the maximal ideal of the local theory. */
class GradedPolyRing {
 public:
  GradedPolyRing(std::vector<std::string> vars, std::vector<int64_t> weights,
                 std::vector<Vec> relations, CoeffField field,
                 GBOptions opt = {});

  // the relation engine holds a reference into this object: pin the address
  GradedPolyRing(const GradedPolyRing&) = delete;
  GradedPolyRing& operator=(const GradedPolyRing&) = delete;

  const RingCtx& ctx() const { return ctx_; }
  int nvars() const { return ctx_.nvars(); }
  const std::vector<Vec>& relations() const { return relations_; }
  const std::vector<Vec>& relation_basis() const { return rel_gb_; }

  // rank-1 normal form modulo the relation basis (idempotent)
  Vec nf(const Vec& p) const;
  // entrywise normal form of a free-module element (valid because the
  // relation submodule of R^r is the direct sum of per-position copies)
  Vec nf_vec(const Vec& v) const;
  bool is_zero(const Vec& p) const { return nf(p).is_zero(); }
  bool eq(const Vec& a, const Vec& b) const;

  // parse + normal form
  Vec element(const std::string& expr) const;

  // standard monomials (not divisible by any relation leading term)
  std::vector<Mono> std_monomials(int64_t deg) const;
  long dim_slice(int64_t deg) const;
  std::vector<long> hilbert_function(int64_t degree_bound) const;

  // generators of the irrelevant ideal, i.e. the variables
  std::vector<Vec> maximal_ideal_gens() const;

  int64_t min_weight() const;

  std::optional<SemigroupInfo> semigroup;  // set by the semigroup builder

 private:
  RingCtx ctx_;
  std::vector<Vec> relations_;
  std::vector<Vec> rel_gb_;  // reduced, canonical
  std::unique_ptr<Buchberger> rel_engine_;
};

// all monomials of the free cover with the given weighted degree
std::vector<Mono> monomials_of_weight(const RingCtx& ctx, int64_t deg);

/* Factory matching the scenario grammar: relations given as expressions.
   Throws EngineError naming the offending relation/term on bad input. */
std::shared_ptr<GradedPolyRing> make_ring(std::vector<std::string> vars,
                                          std::vector<int64_t> weights,
                                          const std::vector<std::string>& relation_exprs,
                                          CoeffField field, GBOptions opt = {});

}  // namespace gradus
