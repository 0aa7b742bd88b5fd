#pragma once

#include "qck/int_poly.hpp"
#include "qck/laurent_polynomial.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qck {

// Phi_n(q), memoized; safe to call from several threads. Throws
// std::invalid_argument for n < 1.
LaurentPolynomial cyclotomic(long n);
std::shared_ptr<const detail::IntPoly> cyclotomic_int(long n);

// [n] = 1 + q + ... + q^(n-1); [0] = 0.
LaurentPolynomial q_integer(long n);

struct FactoredModulus {
  std::vector<std::pair<LaurentPolynomial, int>> factors;
  LaurentPolynomial expanded;
  // Set once pairwise coprimality has actually been checked.
  std::optional<bool> pairwise_coprime;
  long n = 0;
  int e = 0;

  long degree() const { return expanded.max_exponent(); }
  std::string describe() const;
};

// Factors [([n], 1), (Phi_n, e)] with their product. The product is
// recomputed factor by factor and compared on construction.
FactoredModulus build_modulus(long n, int e);

// Records in m whether its factors are pairwise coprime.
void check_pairwise_coprime(FactoredModulus& m);

// lcm(Phi_n^power, [n]) == [n] Phi_n^(power-1), computed through gcd.
bool lcm_identity_check(long n, int power);

}  // namespace qck
