#include "gradus/monomial.hpp"

#include <algorithm>

namespace gradus {

int64_t weighted_deg(const Mono& m, const std::vector<int64_t>& w) {
  int64_t d = 0;
  for (size_t i = 0; i < m.e.size(); ++i) d += (int64_t)m.e[i] * w[i];
  return d;
}

int64_t total_deg(const Mono& m) {
  int64_t d = 0;
  for (auto x : m.e) d += x;
  return d;
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r(a.e.size());
  for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

bool mono_divides(const Mono& a, const Mono& b) {
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Mono mono_quot(const Mono& b, const Mono& a) {
  Mono r(a.e.size());
  for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = b.e[i] - a.e[i];
  return r;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono r(a.e.size());
  for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

bool mono_coprime(const Mono& a, const Mono& b) {
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

int MonoOrder::cmp(const Mono& a, const Mono& b) const {
  if (kind == Kind::elim_wgrevlex) {
    int64_t da = 0, db = 0;
    for (int i = 0; i < elim; ++i) {
      da += (int64_t)a.e[i] * weights[i];
      db += (int64_t)b.e[i] * weights[i];
    }
    if (da != db) return da < db ? -1 : 1;
  }
  int64_t da = weighted_deg(a, weights), db = weighted_deg(b, weights);
  if (da != db) return da < db ? -1 : 1;
  for (int i = (int)a.e.size() - 1; i >= 0; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace gradus
