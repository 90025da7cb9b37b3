#include "gradus/linalg.hpp"

namespace gradus {

namespace {

// reduce to row echelon form in place; returns pivot column of each pivot row
std::vector<int> echelon(const CoeffField& F,
                         std::vector<std::vector<mpq_class>>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = (int)m.size();
  int cols = (int)m[0].size();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[(size_t)i][(size_t)c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[(size_t)r], m[(size_t)p]);
    mpq_class inv = F.inv(m[(size_t)r][(size_t)c]);
    for (int j = c; j < cols; ++j)
      m[(size_t)r][(size_t)j] = F.mul(m[(size_t)r][(size_t)j], inv);
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const mpq_class& f = m[(size_t)i][(size_t)c];
      if (f == 0) continue;
      mpq_class fc = f;
      for (int j = c; j < cols; ++j)
        m[(size_t)i][(size_t)j] = F.sub(
            m[(size_t)i][(size_t)j], F.mul(fc, m[(size_t)r][(size_t)j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

long dense_rank(const CoeffField& F, std::vector<std::vector<mpq_class>> m) {
  return (long)echelon(F, m).size();
}

std::vector<std::vector<mpq_class>> dense_kernel(
    const CoeffField& F, const std::vector<std::vector<mpq_class>>& m) {
  std::vector<std::vector<mpq_class>> e = m;
  std::vector<int> pivots = echelon(F, e);
  int cols = m.empty() ? 0 : (int)m[0].size();
  std::vector<bool> is_pivot((size_t)cols, false);
  for (int c : pivots) is_pivot[(size_t)c] = true;
  std::vector<std::vector<mpq_class>> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[(size_t)c]) continue;
    std::vector<mpq_class> v((size_t)cols, mpq_class(0));
    v[(size_t)c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[(size_t)pivots[r]] = F.neg(e[r][(size_t)c]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace gradus
