#pragma once
#include <memory>
#include <string>
#include <vector>

#include "gradus/ring.hpp"

namespace oracle {

/* Dense linear-algebra homology oracle for Artinian quotient rings.

   The ring is flattened to structure constants on its standard-monomial
   basis (the only engine facility used); modules become plain vector
   spaces with one action matrix per variable. Resolutions, Tor, Ext and
   stable Hom are then computed with dense Gaussian elimination only, so
   the numbers are derived by a pipeline that shares no code with the
   Groebner-driven engine implementation. */

struct DenseRing {
  std::shared_ptr<const gradus::GradedPolyRing> R;
  std::vector<gradus::Mono> basis;          // all standard monomials
  std::vector<std::vector<mpq_class>> act;  // per variable: dim x dim
  int dim = 0;
};

// throws if the quotient is not Artinian or exceeds max_dim
DenseRing flatten(std::shared_ptr<const gradus::GradedPolyRing> R,
                  int max_dim = 40);

struct DenseModule {
  int dim = 0;
  // act[v] is dim x dim, column-major action of variable v
  std::vector<std::vector<mpq_class>> act;
};

// cyclic module A/J for monomial/polynomial generators of J
DenseModule cyclic(const DenseRing& A, const std::vector<gradus::Vec>& gens);

long tor_dim(const DenseRing& A, const DenseModule& M, const DenseModule& N,
             int i);
long ext_dim(const DenseRing& A, const DenseModule& M, const DenseModule& N,
             int i);
long hom_dim(const DenseRing& A, const DenseModule& M, const DenseModule& N);
long stable_hom_dim(const DenseRing& A, const DenseModule& M,
                    const DenseModule& N);

}  // namespace oracle
