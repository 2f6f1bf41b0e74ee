#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "entcoh/errors.hpp"

namespace entcoh {

/// Exact scalar. For the rationals this is an arbitrary-precision fraction in
/// lowest terms with positive denominator; for a prime field it is an integer
/// in [0, p) with denominator 1. All arithmetic goes through Field so the
/// prime-field reduction is never skipped.
using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

struct FieldSpec {
  enum class Kind { rationals, prime_field };
  Kind kind = Kind::rationals;
  long p = 0;  // modulus, meaningful iff kind == prime_field

  static FieldSpec rationals() { return FieldSpec{Kind::rationals, 0}; }
  static FieldSpec prime(long p) { return FieldSpec{Kind::prime_field, p}; }

  bool operator==(const FieldSpec&) const = default;
};

class Field {
 public:
  Field() = default;  // the rationals
  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  long characteristic() const {
    return spec_.kind == FieldSpec::Kind::prime_field ? spec_.p : 0;
  }
  bool operator==(const Field& o) const { return spec_ == o.spec_; }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return reduce(Scalar(1)); }
  Scalar from_long(long v) const { return reduce(Scalar(v)); }

  // mpq_class arithmetic keeps rationals canonical, so only prime fields
  // need the reduction step.
  bool needs_reduce() const {
    return spec_.kind == FieldSpec::Kind::prime_field;
  }
  Scalar add(const Scalar& a, const Scalar& b) const {
    return needs_reduce() ? reduce(a + b) : Scalar(a + b);
  }
  Scalar sub(const Scalar& a, const Scalar& b) const {
    return needs_reduce() ? reduce(a - b) : Scalar(a - b);
  }
  Scalar mul(const Scalar& a, const Scalar& b) const {
    return needs_reduce() ? reduce(a * b) : Scalar(a * b);
  }
  Scalar neg(const Scalar& a) const {
    return needs_reduce() ? reduce(-a) : Scalar(-a);
  }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  static bool is_zero(const Scalar& a) { return sgn(a) == 0; }

  /// Canonicalize an exact rational into this field.
  Scalar reduce(const Scalar& a) const;

  /// Parse "a" or "a/b" (b > 0 after reduction). Prime fields accept plain
  /// integers only and reduce them mod p.
  Scalar parse(const std::string& text) const;
  std::string to_string(const Scalar& a) const;

 private:
  FieldSpec spec_;
};

bool is_prime(long p);

}  // namespace entcoh
