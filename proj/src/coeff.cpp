#include "gradus/coeff.hpp"

namespace gradus {

CoeffField CoeffField::prime(long p) {
  if (p <= 2) throw EngineError("prime field characteristic must exceed 2");
  // trial division is plenty for the sizes accepted here
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw EngineError("field characteristic is not prime");
  CoeffField f;
  f.kind_ = FieldKind::prime;
  f.p_ = p;
  return f;
}

namespace {
long mod_inverse(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  if (nr < 0) nr += p;
  while (nr != 0) {
    long q = r / nr;
    long tmp = t - q * nt; t = nt; nt = tmp;
    tmp = r - q * nr; r = nr; nr = tmp;
  }
  if (r != 1) throw EngineError("element has no inverse mod p");
  return t < 0 ? t + p : t;
}
}  // namespace

mpq_class CoeffField::normalize(const mpq_class& a) const {
  if (kind_ == FieldKind::rationals) return a;
  mpz_class num = a.get_num(), den = a.get_den();
  mpz_class r = num % p_;
  long n = r.get_si();
  if (n < 0) n += p_;
  if (den != 1) {
    mpz_class dr = den % p_;
    long d = dr.get_si();
    if (d < 0) d += p_;
    if (d == 0) throw EngineError("denominator divisible by field characteristic");
    n = (long)(((unsigned long long)n * (unsigned long long)mod_inverse(d, p_)) % (unsigned long long)p_);
  }
  return mpq_class(n);
}

mpq_class CoeffField::add(const mpq_class& a, const mpq_class& b) const {
  return kind_ == FieldKind::rationals ? mpq_class(a + b) : normalize(a + b);
}
mpq_class CoeffField::sub(const mpq_class& a, const mpq_class& b) const {
  return kind_ == FieldKind::rationals ? mpq_class(a - b) : normalize(a - b);
}
mpq_class CoeffField::mul(const mpq_class& a, const mpq_class& b) const {
  return kind_ == FieldKind::rationals ? mpq_class(a * b) : normalize(a * b);
}
mpq_class CoeffField::neg(const mpq_class& a) const {
  return kind_ == FieldKind::rationals ? mpq_class(-a) : normalize(-a);
}
mpq_class CoeffField::inv(const mpq_class& a) const {
  if (a == 0) throw EngineError("division by zero coefficient");
  if (kind_ == FieldKind::rationals) return mpq_class(1 / a);
  mpq_class n = normalize(a);
  long v = n.get_num().get_si();
  if (v == 0) throw EngineError("division by zero coefficient");
  return mpq_class(mod_inverse(v, p_));
}
mpq_class CoeffField::div(const mpq_class& a, const mpq_class& b) const {
  return mul(a, inv(b));
}

std::string CoeffField::str(const mpq_class& a) const { return a.get_str(); }

std::string CoeffField::tag() const {
  return kind_ == FieldKind::rationals ? "rationals" : "prime:" + std::to_string(p_);
}

}  // namespace gradus
