#pragma once

#include "qck/laurent_polynomial.hpp"

#include <string>

namespace qck {

// num/den in lowest terms. den is a monic polynomial with a nonzero
// constant term; every power of q lives in num.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const LaurentPolynomial& p) : num_(p), den_(1) {}  // NOLINT
  RationalFunction(const Rational& c) : num_(c), den_(1) {}           // NOLINT
  RationalFunction(long c) : num_(c), den_(1) {}                      // NOLINT

  const LaurentPolynomial& num() const { return num_; }
  const LaurentPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == LaurentPolynomial(1); }

  // Value at q = x; throws std::domain_error when x is a pole.
  Rational evaluate(const Rational& x) const;
  std::string to_string() const;

  RationalFunction operator-() const;
  RationalFunction inverse() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }

  friend RationalFunction rf_normalize(const LaurentPolynomial& num, const LaurentPolynomial& den);
  // Trusts the caller that num/den is already canonical.
  static RationalFunction from_canonical(LaurentPolynomial num, LaurentPolynomial den);

 private:
  LaurentPolynomial num_;
  LaurentPolynomial den_;
};

// Throws std::domain_error when den is zero.
RationalFunction rf_normalize(const LaurentPolynomial& num, const LaurentPolynomial& den);

RationalFunction pow(const RationalFunction& base, long exponent);

}  // namespace qck
