#pragma once

#include "qck/laurent_polynomial.hpp"
#include "qck/rational_function.hpp"

#include <initializer_list>
#include <random>
#include <utility>

namespace qck::test {

inline LaurentPolynomial lp(std::initializer_list<std::pair<long, Rational>> terms) {
  return LaurentPolynomial::from_terms({terms.begin(), terms.end()});
}

inline LaurentPolynomial q(long e = 1) { return LaurentPolynomial::q(e); }

// Small random Laurent polynomial with rational coefficients.
inline LaurentPolynomial random_lp(std::mt19937_64& rng, long low = -3, long high = 5, int terms = 4) {
  std::uniform_int_distribution<long> exp(low, high);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  std::vector<LaurentPolynomial::Term> t;
  for (int i = 0; i < terms; ++i) {
    Rational c(num(rng), den(rng));
    c.canonicalize();
    t.emplace_back(exp(rng), c);
  }
  return LaurentPolynomial::from_terms(std::move(t));
}

inline LaurentPolynomial random_nonzero_lp(std::mt19937_64& rng, long low = -3, long high = 5,
                                           int terms = 4) {
  for (;;) {
    LaurentPolynomial p = random_lp(rng, low, high, terms);
    if (!p.is_zero()) return p;
  }
}

}  // namespace qck::test
