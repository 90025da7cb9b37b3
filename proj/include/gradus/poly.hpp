#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gradus/coeff.hpp"
#include "gradus/monomial.hpp"

namespace gradus {

/* Descriptor of a free graded polynomial ring: named variables with strictly
   positive weights and a fixed monomial order. Quotients are layered on top
   (ring.hpp); everything here is order/arithmetic plumbing. */
struct RingCtx {
  std::vector<std::string> vars;
  std::vector<int64_t> weights;
  MonoOrder order;
  CoeffField field;

  int nvars() const { return (int)vars.size(); }
  int var_index(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return (int)i;
    return -1;
  }
};

/* One term of a free-module element: coefficient * monomial * basis(pos). */
struct VTerm {
  int32_t pos = 0;
  Mono m;
  mpq_class c;
};

/* Element of a free module R^r. Terms are kept strictly sorted, descending
   in the position-over-term order (lower position beats higher, ties by the
   ring's monomial order), with no zero coefficients. Rank-1 elements double
   as plain polynomials. */
struct Vec {
  std::vector<VTerm> t;

  bool is_zero() const { return t.empty(); }
  const VTerm& lead() const { return t.front(); }
  size_t nterms() const { return t.size(); }
};

// order on (pos, mono): +1 if a > b
int vterm_cmp(const MonoOrder& o, int32_t pa, const Mono& ma, int32_t pb, const Mono& mb);

Vec vec_make(const RingCtx& ctx, std::vector<VTerm> terms);  // sorts/merges
Vec vec_add(const RingCtx& ctx, const Vec& a, const Vec& b);
Vec vec_sub(const RingCtx& ctx, const Vec& a, const Vec& b);
Vec vec_neg(const RingCtx& ctx, const Vec& a);
Vec vec_scale(const RingCtx& ctx, const Vec& a, const mpq_class& c);
// a - c * x^m * b  (the reduction workhorse)
Vec vec_sub_mul(const RingCtx& ctx, const Vec& a, const mpq_class& c, const Mono& m, const Vec& b);
// c * x^m * a, optionally relocating positions by `shift`
Vec vec_mul_term(const RingCtx& ctx, const Vec& a, const mpq_class& c, const Mono& m);
Vec vec_shift_pos(const Vec& a, int32_t shift);
// product of two rank-1 elements
Vec poly_mul(const RingCtx& ctx, const Vec& a, const Vec& b);
Vec vec_monic(const RingCtx& ctx, const Vec& a);

Vec poly_one(const RingCtx& ctx);
Vec poly_var(const RingCtx& ctx, int i);
Vec poly_const(const RingCtx& ctx, const mpq_class& c);

/* Degree of a homogeneous element w.r.t. twists on the ambient free module;
   nullopt for 0. Throws EngineError if the element is not homogeneous. */
std::optional<int64_t> vec_degree_checked(const RingCtx& ctx, const Vec& v,
                                          const std::vector<int64_t>& twists);
bool vec_is_homogeneous(const RingCtx& ctx, const Vec& v,
                        const std::vector<int64_t>& twists);

std::string mono_str(const RingCtx& ctx, const Mono& m);
std::string poly_str(const RingCtx& ctx, const Vec& v);  // rank-1 pretty form
std::string vec_str(const RingCtx& ctx, const Vec& v);   // [pos]... form

/* Polynomial expression parser: + - * ^ ( ), integer and a/b constants,
   variable identifiers. Returns a rank-1 element. */
Vec parse_poly(const RingCtx& ctx, const std::string& text);

}  // namespace gradus
