#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradus/fpmodule.hpp"

namespace gradus {

/* Report on one homology module Ext^i / Tor_i / lhom. Zero-testing is
   always exact (graded Nakayama membership on a minimal subquotient
   presentation, never degree truncation). Finite length is certified by
   annihilation: some power m^t with t <= 12 kills every generator; only
   then is k_dimension filled (summed degreewise over the full support).
   hilbert_values are the graded dimensions at degrees hilbert_from ..
   hilbert_from + 24 regardless. */
struct HomologyReport {
  std::string functor;  // "Ext" / "Tor" / "lhom"
  int index = 0;
  bool is_zero = true;
  bool finite_length = false;
  long k_dimension = -1;  // filled (>= 0) only when finite_length
  int64_t hilbert_from = 0;
  std::vector<long> hilbert_values;
  std::string field;  // coefficient-field tag of the ring
};

/* Bounded search for a homological dimension. `value` is set when the
   search certifies one within `bound`; otherwise `exceeded` is true.
   `evidence` lists every (index, is_zero) fact inspected, in order.
   For id the certificate is heuristic (trailing zero window) and
   `heuristic_certificate` is set; depth/grade/pd values are exact. */
struct DimensionProbe {
  std::string quantity;  // "depth" / "grade" / "pd" / "id"
  std::optional<int> value;
  int bound = 0;
  bool exceeded = false;
  std::vector<std::pair<int, bool>> evidence;
  bool heuristic_certificate = false;
  std::string method;  // "literal", "termination", "canonical-dual"
};

struct RigidityViolation {
  int sample;         // index into the samples list
  int trigger;        // n with Tor_n = Tor_{n+1} = 0
  int failing_index;  // i in (n, window_hi] with Tor_i != 0
};

/* Outcome of the two-consecutive-vanishing propagation test. A window is
   "triggered" when some sample has Tor_n = Tor_{n+1} = 0 within the window;
   the check then demands vanishing through the window end. */
struct RigidityReport {
  int window_lo = 1;
  int window_hi = 6;
  int windows_triggered = 0;
  std::vector<RigidityViolation> violations;
  bool ok() const { return violations.empty(); }
};

/* Exactness verdicts for the four-term sequence
   Tor_2(D, -) -> Hom-dual tensor -> Ext^n(M, -) -> Tor_1(D, -) -> 0
   with D the transpose of the n-th syzygy of M, evaluated at N. Each spot
   is verified by two-way membership of generators. */
struct ExactnessReport {
  int n = 0;
  bool at_tensor = false;  // kernel of the middle map = image from Tor_2
  bool at_ext = false;     // kernel of the right map = image of middle map
  bool at_tor1 = false;    // right map well-defined and onto
  std::string detail;
  bool ok() const { return at_tensor && at_ext && at_tor1; }
};

/* Homology modules themselves (minimal presentations). ext_module is
   H^i of Hom(F_., N), tor_module is H_i of F_. (x) N, for the cached
   minimal resolution F_. of M. */
FPModule ext_module(const FPModule& M, const FPModule& N, int i,
                    GBOptions opt = {});
FPModule tor_module(const FPModule& M, const FPModule& N, int i,
                    GBOptions opt = {});

HomologyReport ext(const FPModule& M, const FPModule& N, int i,
                   GBOptions opt = {});
HomologyReport tor(const FPModule& M, const FPModule& N, int i,
                   GBOptions opt = {});
// lhom(M, N): maps M -> N modulo those factoring through a free module
HomologyReport stable_hom(const FPModule& M, const FPModule& N,
                          GBOptions opt = {});

// least i <= bound with Ext^i(k, M) != 0
DimensionProbe depth_probe(const FPModule& M, int bound = 8,
                           GBOptions opt = {});
// least i <= bound with Ext^i(M, R) != 0
DimensionProbe grade_probe(const FPModule& M, int bound = 8,
                           GBOptions opt = {});
// exact projective dimension when the minimal resolution stops within bound
DimensionProbe pd_probe(const FPModule& M, int bound = 8, GBOptions opt = {});
/* Injective dimension via Bass numbers dim Ext^i(k, M). Reports the last
   nonzero index as the value when a trailing zero window of length >= 2
   fits under the bound and the value is >= depth of the ring; exceeds(bound)
   otherwise. Over a semigroup-constructed ring, a maximal Cohen-Macaulay M
   is probed through its canonical dual (Bass numbers of M = Betti numbers
   of Hom(M, omega), shifted by dim R), which stays feasible where the
   residue-field resolution grows exponentially. */
DimensionProbe id_probe(const FPModule& M, int bound = 8, GBOptions opt = {});

RigidityReport rigidity_check(const FPModule& N,
                              const std::vector<FPModule>& samples,
                              int window_lo = 1, int window_hi = 6,
                              GBOptions opt = {});

ExactnessReport four_term_exactness(const FPModule& M, const FPModule& N,
                                    int n, GBOptions opt = {});

/* Note on concurrency: every operation is pure on its inputs, but the lazy
   resolution cache inside FPModule is not synchronized. Concurrent callers
   should work on distinct FPModule values. */

}  // namespace gradus
