#pragma once
#include <cstdint>
#include <vector>

namespace gradus {

/* Monomial = dense exponent vector over the ambient variable list. */
struct Mono {
  std::vector<int32_t> e;

  Mono() = default;
  explicit Mono(size_t nvars) : e(nvars, 0) {}

  bool is_one() const {
    for (auto x : e) if (x) return false;
    return true;
  }
  bool operator==(const Mono& o) const { return e == o.e; }
};

int64_t weighted_deg(const Mono& m, const std::vector<int64_t>& w);
int64_t total_deg(const Mono& m);

Mono mono_mul(const Mono& a, const Mono& b);
bool mono_divides(const Mono& a, const Mono& b);   // a | b
Mono mono_quot(const Mono& b, const Mono& a);      // b / a, assumes a | b
Mono mono_lcm(const Mono& a, const Mono& b);
bool mono_coprime(const Mono& a, const Mono& b);

/* Total order on monomials of one ring.
   wgrevlex: weighted degree first, ties reverse-lexicographic (the later a
   variable, the more a large exponent pushes the monomial down).
   elim_wgrevlex: weighted degree of the first `elim` variables first, then
   the wgrevlex comparison; eliminates the leading block. */
struct MonoOrder {
  enum class Kind { wgrevlex, elim_wgrevlex };
  Kind kind = Kind::wgrevlex;
  std::vector<int64_t> weights;
  int elim = 0;

  int cmp(const Mono& a, const Mono& b) const;  // -1, 0, +1
};

}  // namespace gradus
