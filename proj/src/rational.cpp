#include "qseries/rational.hpp"

#include "qseries/errors.hpp"

namespace qseries {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw NoInverse("rational with zero denominator");
  }
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') {
    s.erase(0, 1);
  }
  if (s.empty()) {
    throw InvalidConstruction("empty rational literal");
  }
  mpq_class v;
  if (v.set_str(s, 10) != 0) {
    throw InvalidConstruction("malformed rational literal '" + std::string(text) + "'");
  }
  if (v.get_den() == 0) {
    throw NoInverse("rational with zero denominator");
  }
  v.canonicalize();
  Rational r;
  r.v_ = v;
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

std::optional<Rational> Rational::inverse() const {
  if (is_zero()) {
    return std::nullopt;
  }
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

std::string Rational::str() const { return v_.get_str(10); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw NoInverse("division by zero");
  }
  v_ /= o.v_;
  return *this;
}

long mod_residue(const Rational& r, long m) {
  if (m < 2) {
    throw ModularReductionError("modulus must be at least 2");
  }
  const Integer mod(m);
  Integer den = r.denominator();
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0) {
    throw ModularReductionError("denominator " + den.get_str() + " is not invertible modulo " +
                                std::to_string(m));
  }
  Integer res = r.numerator() * inv;
  mpz_fdiv_r(res.get_mpz_t(), res.get_mpz_t(), mod.get_mpz_t());
  return res.get_si();
}

}  // namespace qseries
