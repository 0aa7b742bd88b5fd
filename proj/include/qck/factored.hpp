#pragma once

// Rational functions kept as scalar * q^e * numer * prod(atom^k), where the
// atoms are pairwise distinct irreducible polynomials and k may be negative.
// Sums expand only the cofactors they need, so the common denominator of a
// long sum never has to be rediscovered through polynomial gcds.

#include "qck/int_poly.hpp"
#include "qck/rational_function.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace qck {

// Phi_m when beta is zero, otherwise the primitive integer polynomial
// |u| q^m - sgn(u) v for beta = u/v, a unit multiple of 1 - beta q^m.
struct Atom {
  long m = 0;
  Rational beta = 0;

  bool is_cyclotomic() const { return beta == 0; }
  std::string to_string() const;
  friend bool operator<(const Atom& x, const Atom& y) {
    if (x.m != y.m) return x.m < y.m;
    return x.beta < y.beta;
  }
  friend bool operator==(const Atom& x, const Atom& y) { return x.m == y.m && x.beta == y.beta; }
};

std::shared_ptr<const detail::IntPoly> atom_poly(const Atom& atom);

class FactoredRF {
 public:
  FactoredRF() = default;  // zero

  static FactoredRF constant(const Rational& c);
  static FactoredRF one() { return constant(1); }
  static FactoredRF q_power(long exponent, const Rational& c = 1);
  // 1 - beta q^m. Throws std::domain_error for a binomial that is reducible
  // over Q (beta a p-th power for some prime p | m, or -4 beta^-1 a fourth
  // power when 4 | m); such values are outside what the atoms can express.
  static FactoredRF one_minus(const Rational& beta, long m);
  static FactoredRF q_integer(long n);
  static FactoredRF from_polynomial(const LaurentPolynomial& p);

  bool is_zero() const { return scalar_ == 0; }
  const Rational& scalar() const { return scalar_; }
  long q_exponent() const { return qexp_; }
  const detail::IntPoly& numer() const { return numer_; }
  const std::map<Atom, long>& atoms() const { return atoms_; }

  // Throws std::domain_error("parameter pole") for zero. Only values whose
  // numer is 1 (pure atom products) can be inverted.
  FactoredRF inverse() const;
  FactoredRF pow(long exponent) const;
  FactoredRF operator-() const;

  friend FactoredRF operator*(const FactoredRF& x, const FactoredRF& y);
  friend FactoredRF operator/(const FactoredRF& x, const FactoredRF& y) { return x * y.inverse(); }
  friend FactoredRF operator+(const FactoredRF& x, const FactoredRF& y);
  friend FactoredRF operator-(const FactoredRF& x, const FactoredRF& y) { return x + (-y); }
  FactoredRF& operator*=(const FactoredRF& y) { return *this = *this * y; }
  FactoredRF& operator+=(const FactoredRF& y) { return *this = *this + y; }

  // Multiplicity of the atom in the value (negative in the denominator).
  long valuation(const Atom& atom) const;

  Rational evaluate(const Rational& x) const;
  RationalFunction to_rational_function() const;
  // Numerator and denominator polynomials of the lowest-terms form, with
  // the unit factors left on the numerator side.
  LaurentPolynomial expanded_numerator() const;
  LaurentPolynomial expanded_denominator() const;

  friend FactoredRF sum(const std::vector<FactoredRF>& terms);

 private:
  void normalize_numer();
  void reduce();

  Rational scalar_ = 0;
  long qexp_ = 0;
  detail::IntPoly numer_;
  std::map<Atom, long> atoms_;
};

FactoredRF sum(const std::vector<FactoredRF>& terms);

}  // namespace qck
