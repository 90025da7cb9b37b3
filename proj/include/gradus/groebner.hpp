#pragma once
#include <cstdint>
#include <memory>
#include <vector>

#include "gradus/ring.hpp"

namespace gradus {

/* Graded free module R^rank with a weighted-degree twist per position:
   basis vector e_i has degree twists[i]. */
struct FreeModule {
  std::shared_ptr<const GradedPolyRing> R;
  std::vector<int64_t> twists;

  int rank() const { return (int)twists.size(); }
};

FreeModule free_module(std::shared_ptr<const GradedPolyRing> R,
                       std::vector<int64_t> twists);

/* Finitely generated submodule of a free module. Generators are stored with
   entries in ring normal form; each must be homogeneous for the twists. */
struct Submodule {
  FreeModule F;
  std::vector<Vec> gens;
};

Submodule make_submodule(FreeModule F, std::vector<Vec> gens);

/* Groebner basis of a submodule over the quotient ring, realized by
   adjoining relation multiples at every basis position. The reported basis
   filters those out (elements vanishing entrywise in the ring); membership
   uses the full internal basis. */
class GBHandle {
 public:
  GBHandle(const Submodule& S, GBOptions opt = {});

  const Submodule& source() const { return S_; }
  const std::vector<Vec>& basis() const { return quotient_basis_; }

  Vec reduce(const Vec& v) const;      // normal form over the quotient ring
  bool member(const Vec& v) const;     // checks ambient compatibility

  // standard monomials of F/S at one degree: basis vectors x^a e_p not
  // divisible by any leading term of the internal basis
  std::vector<std::pair<int32_t, Mono>> std_vectors(int64_t deg) const;
  long slice_dim(int64_t deg) const;   // dim_k of (F/S)_deg

 private:
  Submodule S_;
  std::unique_ptr<Buchberger> engine_;
  std::vector<Vec> quotient_basis_;
};

std::shared_ptr<GBHandle> groebner(const Submodule& S, GBOptions opt = {});

// adjoin relation multiples at every position (working over the quotient)
void add_quotient_relations(Buchberger& engine, const GradedPolyRing& R,
                            int rank);

/* Generators of the relation module {c in R^s : sum c_t g_t = 0} of the
   generators of S, as a submodule of a free module with one position per
   generator (twist = generator degree). Method: adjoin one tag position per
   generator, run Buchberger under position-over-term (ambient block is then
   an elimination block), keep basis elements supported purely on tags. */
Submodule syzygies(const Submodule& S, GBOptions opt = {});

/* Kernel of the map F1 -> F0 sending e_j to cols[j], over the quotient ring.
   Columns must be homogeneous of degree F1.twists[j] (zero columns allowed). */
Submodule kernel_of_map(const FreeModule& F1, const FreeModule& F0,
                        const std::vector<Vec>& cols, GBOptions opt = {});

/* Kernel of the composite F1 -> F0 -> F0 / span(denom): vectors v with
   A v in span(denom) + relation module. Same tag mechanism; the denominator
   columns get no tags. */
Submodule kernel_modulo(const FreeModule& F1, const FreeModule& F0,
                        const std::vector<Vec>& cols,
                        const std::vector<Vec>& denom, GBOptions opt = {});

/* Existence-only kernel probe: true iff the map F1 -> F0 given by `cols`
   has nonzero kernel. Exits as soon as one nonzero kernel element is
   certified, so this is much cheaper than kernel_of_map on maps whose
   kernels are large; a `false` answer always comes from a completed
   Groebner basis. */
bool kernel_nonempty(const FreeModule& F1, const FreeModule& F0,
                     const std::vector<Vec>& cols, GBOptions opt = {});

}  // namespace gradus
