#include "qck/rational_function.hpp"

#include <stdexcept>

namespace qck {

RationalFunction rf_normalize(const LaurentPolynomial& num, const LaurentPolynomial& den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  RationalFunction r;
  if (num.is_zero()) return r;
  // q is a unit, so den's lowest power moves into num before the gcd.
  LaurentPolynomial n = num.shifted(-den.min_exponent());
  LaurentPolynomial d = den.shifted(-den.min_exponent());
  if (d.term_count() > 1) {
    LaurentPolynomial g = gcd(n, d);
    if (!g.is_constant()) {
      n = divrem(n, g).quotient;
      d = divrem(d, g).quotient;
    }
  }
  Rational lc = d.leading_coefficient();
  if (lc != 1) {
    Rational inv = 1 / lc;
    n *= inv;
    d *= inv;
  }
  r.num_ = std::move(n);
  r.den_ = std::move(d);
  return r;
}

RationalFunction RationalFunction::from_canonical(LaurentPolynomial num, LaurentPolynomial den) {
  RationalFunction r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

Rational RationalFunction::evaluate(const Rational& x) const {
  Rational d = den_.evaluate(x);
  if (d == 0) throw std::domain_error("evaluation at a pole");
  return num_.evaluate(x) / d;
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction RationalFunction::operator-() const { return from_canonical(-num_, den_); }

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return rf_normalize(den_, num_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return rf_normalize(a.num_ + b.num_, a.den_);
  LaurentPolynomial g = gcd(a.den_, b.den_);
  LaurentPolynomial bd = divrem(b.den_, g).quotient;
  LaurentPolynomial ad = divrem(a.den_, g).quotient;
  return rf_normalize(a.num_ * bd + b.num_ * ad, a.den_ * bd);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Cross-cancel first so the products stay small.
  LaurentPolynomial g1 = gcd(a.num_, b.den_);
  LaurentPolynomial g2 = gcd(b.num_, a.den_);
  LaurentPolynomial an = divrem(a.num_, g1).quotient, bd = divrem(b.den_, g1).quotient;
  LaurentPolynomial bn = divrem(b.num_, g2).quotient, ad = divrem(a.den_, g2).quotient;
  return rf_normalize(an * bn, ad * bd);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return a * b.inverse();
}

RationalFunction pow(const RationalFunction& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  return RationalFunction::from_canonical(pow(base.num(), static_cast<unsigned long>(exponent)),
                                          pow(base.den(), static_cast<unsigned long>(exponent)));
}

}  // namespace qck
