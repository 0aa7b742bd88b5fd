#pragma once

#include "qck/int_poly.hpp"
#include "qck/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qck {

// A finite sum of c_e q^e over integer exponents e. Terms are stored sorted
// by exponent and never carry a zero coefficient, so structural equality is
// equality of polynomials.
class LaurentPolynomial {
 public:
  using Term = std::pair<long, Rational>;

  LaurentPolynomial() = default;
  LaurentPolynomial(const Rational& c);  // NOLINT: constants convert implicitly
  LaurentPolynomial(long c);             // NOLINT

  static LaurentPolynomial monomial(const Rational& c, long exponent);
  static LaurentPolynomial q(long exponent = 1) { return monomial(1, exponent); }
  static LaurentPolynomial from_terms(std::vector<Term> terms);
  static LaurentPolynomial from_dense(const std::vector<Rational>& coeffs, long low = 0);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  bool is_monomial() const { return terms_.size() == 1; }
  long min_exponent() const { return terms_.empty() ? 0 : terms_.front().first; }
  long max_exponent() const { return terms_.empty() ? 0 : terms_.back().first; }
  long span() const { return max_exponent() - min_exponent(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  Rational coefficient(long exponent) const;
  const Rational& leading_coefficient() const { return terms_.back().second; }
  const Rational& trailing_coefficient() const { return terms_.front().second; }

  // q^k * this
  LaurentPolynomial shifted(long k) const;
  // Leading coefficient scaled to 1 and lowest exponent moved to 0.
  LaurentPolynomial monic() const;
  Rational evaluate(const Rational& x) const;
  std::string to_string() const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const Rational& c);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c) { return a *= c; }
  friend LaurentPolynomial operator*(const Rational& c, LaurentPolynomial a) { return a *= c; }
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);

 private:
  std::vector<Term> terms_;
};

LaurentPolynomial pow(const LaurentPolynomial& base, unsigned long exponent);

struct DivRem {
  LaurentPolynomial quotient;
  LaurentPolynomial remainder;
};

// Long division after shifting both operands to lowest exponent 0; the
// shifts are undone on the results, so dividend = divisor * quotient +
// remainder holds exactly. Throws std::domain_error on a zero divisor.
DivRem divrem(const LaurentPolynomial& dividend, const LaurentPolynomial& divisor);

bool divides(const LaurentPolynomial& divisor, const LaurentPolynomial& x);

// Monic gcd with lowest exponent 0. q itself is a unit in the Laurent ring,
// so powers of q never appear in a gcd.
LaurentPolynomial gcd(const LaurentPolynomial& x, const LaurentPolynomial& y);

struct ExtendedGcd {
  LaurentPolynomial g;
  LaurentPolynomial u;
  LaurentPolynomial v;
};

// u*x + v*y == g with g = gcd(x, y).
ExtendedGcd ext_gcd(const LaurentPolynomial& x, const LaurentPolynomial& y);

// value == scale * q^shift * poly with poly primitive, positive leading
// coefficient and nonzero constant term. Zero maps to scale 0, empty poly.
struct ScaledIntPoly {
  Rational scale;
  long shift = 0;
  detail::IntPoly poly;
};

ScaledIntPoly to_scaled_int_poly(const LaurentPolynomial& p);
LaurentPolynomial from_int_poly(const detail::IntPoly& poly, const Rational& scale = 1, long shift = 0);

}  // namespace qck
