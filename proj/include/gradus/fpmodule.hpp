#pragma once
#include <memory>
#include <vector>

#include "gradus/groebner.hpp"

namespace gradus {

struct MinimalResolution;

/* Finitely presented graded module M = coker(A: F1 -> F0), columns of A
   stored as vectors in F0. Twist bookkeeping is strict: every column j is
   homogeneous of degree F1.twists[j]. */
struct FPModule {
  FreeModule F0;
  FreeModule F1;
  std::vector<Vec> cols;  // one per F1 position
  bool minimal = false;

  std::shared_ptr<const GradedPolyRing> ring() const { return F0.R; }
  int gens() const { return F0.rank(); }
  int rels() const { return F1.rank(); }

  // lazily filled by resolve(); shared across copies of this module value
  std::shared_ptr<MinimalResolution> cache =
      std::make_shared<MinimalResolution>();
};

struct MinimalResolution {
  // F[0], F[1], ... F[s]; d[i]: F[i] -> F[i-1] for i >= 1 (d[0] unused)
  std::vector<FreeModule> F;
  std::vector<std::vector<Vec>> d;
  bool terminated = false;

  int steps() const { return (int)F.size() - 1; }
  long betti(int i) const {
    if (terminated && i > steps()) return 0;
    return i <= steps() ? F[(size_t)i].rank() : -1;
  }
};

FPModule fp_module(FreeModule F0, FreeModule F1, std::vector<Vec> cols);
FPModule fp_free(std::shared_ptr<const GradedPolyRing> R,
                 std::vector<int64_t> twists);
FPModule fp_zero(std::shared_ptr<const GradedPolyRing> R);
// R/(ideal gens); twist 0
FPModule fp_cyclic(std::shared_ptr<const GradedPolyRing> R,
                   const std::vector<Vec>& ideal_gens, GBOptions opt = {});
// the residue field R/m
FPModule fp_k(std::shared_ptr<const GradedPolyRing> R, GBOptions opt = {});
/* An ideal I as the module image(R^g -> R): generators become the module
   generators, the presentation is their syzygy module. */
FPModule fp_ideal(std::shared_ptr<const GradedPolyRing> R,
                  const std::vector<Vec>& ideal_gens, GBOptions opt = {});

/* Remove unit entries by row/column pivoting (row-major scan to fixpoint),
   then drop redundant presentation columns (graded Nakayama, ascending
   degree). The result presents an isomorphic module and has no entry of
   weighted degree 0. */
FPModule minimal_presentation(const FPModule& M, GBOptions opt = {});

bool is_zero_module(const FPModule& M, GBOptions opt = {});

/* Minimal generators of a submodule: indices kept after the graded-Nakayama
   greedy prune (candidates ascending by degree, then input order). */
std::vector<int> minimize_generators(const Submodule& S, GBOptions opt = {});

/* Minimal graded free resolution out to homological degree `steps`
   (extends/reuses the cache on M). If certify_end, the kernel of the last
   differential is computed even when it exceeds `steps`, so `terminated`
   is definitive for pd <= steps. */
const MinimalResolution& resolve(const FPModule& M, int steps,
                                 bool certify_end = false, GBOptions opt = {});

FPModule syzygy(const FPModule& M, int n, GBOptions opt = {});
FPModule transpose(const FPModule& M, GBOptions opt = {});

/* Present (span(numerator) + span(denominator)) / span(denominator) as a
   finitely presented module, minimally. Both gen lists live in W. */
FPModule present_subquotient(const FreeModule& W,
                             const std::vector<Vec>& numerator,
                             const std::vector<Vec>& denominator,
                             GBOptions opt = {});
FPModule hom_module(const FPModule& M, const FPModule& N, GBOptions opt = {});
FPModule tensor(const FPModule& M, const FPModule& N, GBOptions opt = {});

// graded dimensions dim_k(M_d) for 0 <= d <= bound
std::vector<long> module_hilbert(const FPModule& M, int64_t bound,
                                 GBOptions opt = {});

}  // namespace gradus
