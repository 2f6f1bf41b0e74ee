#include "entcoh/field.hpp"

#include <cctype>

namespace entcoh {

bool is_prime(long p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (long d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

Field::Field(FieldSpec spec) : spec_(spec) {
  if (spec_.kind == FieldSpec::Kind::prime_field && !is_prime(spec_.p)) {
    throw MalformedInput("field modulus " + std::to_string(spec_.p) +
                         " is not prime");
  }
}

Scalar Field::reduce(const Scalar& a) const {
  if (spec_.kind == FieldSpec::Kind::rationals) {
    Scalar r = a;
    r.canonicalize();
    return r;
  }
  // Prime field: a must have an invertible denominator; fold it in and
  // reduce the result into [0, p).
  mpz_class p(spec_.p);
  mpz_class den = a.get_den();
  mpz_class num = a.get_num();
  mpz_class r;
  if (den == 1) {
    mpz_mod(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  } else {
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0) {
      throw MalformedInput("denominator not invertible mod " +
                           std::to_string(spec_.p));
    }
    mpz_class t = num * dinv;
    mpz_mod(r.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
  }
  return Scalar(r);
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw MalformedInput("division by zero");
  if (spec_.kind == FieldSpec::Kind::rationals) {
    Scalar r = 1 / a;
    r.canonicalize();
    return r;
  }
  mpz_class p(spec_.p);
  mpz_class num = reduce(a).get_num();
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0) {
    throw MalformedInput("element not invertible mod " +
                         std::to_string(spec_.p));
  }
  return Scalar(r);
}

Scalar Field::parse(const std::string& text) const {
  if (text.empty()) throw ParseError("empty scalar");
  auto check_int = [](const std::string& s) {
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!check_int(text)) throw ParseError("bad scalar '" + text + "'");
    return reduce(Scalar(mpz_class(text)));
  }
  if (spec_.kind == FieldSpec::Kind::prime_field) {
    throw ParseError("prime-field scalar '" + text +
                     "' must be a plain integer");
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!check_int(num) || !check_int(den)) {
    throw ParseError("bad scalar '" + text + "'");
  }
  mpz_class d(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  Scalar r(mpz_class(num), d);
  r.canonicalize();
  return r;
}

std::string Field::to_string(const Scalar& a) const {
  Scalar r = reduce(a);
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace entcoh
