#pragma once

#include "qck/rational.hpp"
#include "qck/verdict.hpp"

#include <cstdint>

namespace qck {

bool is_prime(long n);

// An element of Z/p^k Z with p an odd prime.
class PadicResidue {
 public:
  // Throws std::invalid_argument unless p is an odd prime and k >= 1.
  PadicResidue(long p, int k, const Integer& value);

  long p() const { return p_; }
  int k() const { return k_; }
  const Integer& modulus() const { return modulus_; }
  const Integer& value() const { return value_; }

  // The residue of a rational whose denominator is prime to p.
  static PadicResidue from_rational(long p, int k, const Rational& x);
  PadicResidue reduced(int k) const;
  PadicResidue inverse() const;

  friend PadicResidue operator+(const PadicResidue& x, const PadicResidue& y);
  friend PadicResidue operator-(const PadicResidue& x, const PadicResidue& y);
  friend PadicResidue operator*(const PadicResidue& x, const PadicResidue& y);
  PadicResidue operator-() const;
  bool operator==(const PadicResidue& o) const {
    return p_ == o.p_ && k_ == o.k_ && value_ == o.value_;
  }

 private:
  long p_;
  int k_;
  Integer modulus_;
  Integer value_;
};

// (-1)^m prod_{0<j<m, p does not divide j} j mod p^k, with m in [0, p^k)
// congruent to x. Throws std::invalid_argument when p divides x's
// denominator.
PadicResidue padic_gamma(const Rational& x, long p, int k);

// Rising factorial x (x+1) ... (x+k-1).
Rational pochhammer(const Rational& x, long k);

// sum_{k<=(p-1)/4} (8k+1) (1/4)_k^4 / k!^4 == p G(1/4) G(1/2) / G(3/4) mod p^3
Verdict verify_g2(long p, bool negate_rhs = false);
// sum_{k<=(p-1)/3} (6k+1) (1/3)_k^4 / k!^4 == -p G(1/3)^3 mod p^4
Verdict verify_he(long p, bool negate_rhs = false);

// Gamma_p(1) = -1, the functional equation for 2 <= m <= 3p, precision
// coherence between k = 2 and k = 3, and Gamma_p(1/2)^2 = (-1)^((p+1)/2).
Verdict padic_gamma_sanity(long p);

}  // namespace qck
