#pragma once
#include <optional>
#include <string>
#include <vector>

#include "gradus/ring.hpp"

namespace gradus {

/* Numerical semigroup <a_1, ..., a_s>: all non-negative integer
   combinations of the generators. Normalized so the generators are
   ascending and minimal (none representable by the others). */
struct NumericalSemigroup {
  std::vector<int64_t> gens;
  std::vector<int64_t> gaps;  // ascending; empty iff the semigroup is N
  int64_t frobenius = -1;     // largest gap, -1 when there are none
  std::vector<int64_t> pf;    // pseudo-Frobenius numbers, ascending

  bool contains(int64_t d) const;
  int type() const { return (int)pf.size(); }
};

/* Validates positivity, gcd 1 and minimality; a redundant generator is
   reported by value in the error. */
NumericalSemigroup make_semigroup(std::vector<int64_t> gens);

/* Weighted-graded model of k[[t^{a_1}, ..., t^{a_s}]], with extra free
   variables appended: one variable per generator (weight = generator),
   defining toric ideal derived by fiber completion. At each t-degree
   d <= frobenius + 2 max(gens) binomials are added until the ring's
   degree-d slice has the semigroup-indicator dimension; any toric binomial
   of larger t-degree factors through an intermediate monomial sharing a
   variable with each side (its co-degree exceeds the Frobenius number), so
   completion up to that bound yields the whole ideal. The result carries a
   SemigroupInfo tag. Default variable names: x, y, z, w, v, q. */
std::shared_ptr<GradedPolyRing> build_ring(
    const NumericalSemigroup& S, const std::vector<std::string>& extra_vars,
    const std::vector<int64_t>& extra_weights, CoeffField field,
    GBOptions opt = {});

/* The canonical monomial of t-weight e in a semigroup-tagged ring: greedy
   largest-generator-first factorization, then ring normal form (downstream
   logic depends only on the class, not the representative). nullopt when e
   is a gap. Extra free variables never appear in the result. */
std::optional<Vec> t_power(const GradedPolyRing& R, int64_t e);

}  // namespace gradus
