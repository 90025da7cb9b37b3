#pragma once
#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace gradus {

struct EngineError : std::runtime_error {
  explicit EngineError(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceeded : EngineError {
  explicit BudgetExceeded(const std::string& what) : EngineError(what) {}
};

enum class FieldKind { rationals, prime };

/* Exact coefficient arithmetic. Rationals are arbitrary precision (GMP).
   The prime-field option keeps residues in [0, p) with denominator 1; it
   exists as a speed knob and every report built on it carries a flag. */
class CoeffField {
public:
  CoeffField() : kind_(FieldKind::rationals), p_(0) {}
  static CoeffField rationals() { return CoeffField(); }
  static CoeffField prime(long p);

  FieldKind kind() const { return kind_; }
  long characteristic() const { return kind_ == FieldKind::prime ? p_ : 0; }

  mpq_class normalize(const mpq_class& a) const;
  mpq_class add(const mpq_class& a, const mpq_class& b) const;
  mpq_class sub(const mpq_class& a, const mpq_class& b) const;
  mpq_class mul(const mpq_class& a, const mpq_class& b) const;
  mpq_class div(const mpq_class& a, const mpq_class& b) const;
  mpq_class neg(const mpq_class& a) const;
  mpq_class inv(const mpq_class& a) const;
  mpq_class from_long(long n) const { return normalize(mpq_class(n)); }

  std::string str(const mpq_class& a) const;
  std::string tag() const;  // "rationals" or "prime:<p>"

  bool operator==(const CoeffField& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }

private:
  FieldKind kind_;
  long p_;
};

}  // namespace gradus
