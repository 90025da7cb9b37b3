#pragma once
#include <vector>

#include "gradus/coeff.hpp"

namespace gradus {

/* Exact dense Gaussian elimination over a coefficient field. Matrices are
   row-major: m[i][j]. Empty matrices are fine (rank 0). */

long dense_rank(const CoeffField& F, std::vector<std::vector<mpq_class>> m);

// basis of { v : M v = 0 }, each vector of length = #columns of M
std::vector<std::vector<mpq_class>> dense_kernel(
    const CoeffField& F, const std::vector<std::vector<mpq_class>>& m);

}  // namespace gradus
