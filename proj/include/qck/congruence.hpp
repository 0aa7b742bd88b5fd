#pragma once

#include "qck/cyclotomic.hpp"
#include "qck/factored.hpp"
#include "qck/rational_function.hpp"
#include "qck/verdict.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace qck {

// lhs == rhs modulo M: with lhs - rhs = N/D in lowest terms, gcd(D, M) = 1
// and M | N. A common factor of D and M is reported as a gcd obstruction.
std::optional<Witness> congruence_witness(const RationalFunction& lhs, const RationalFunction& rhs,
                                          const FactoredModulus& m);

// Same contract on factored values. The verdict is taken factor by factor
// (each Phi_f of the modulus with its multiplicity) and cross-checked
// against the expanded modulus; a disagreement throws std::logic_error.
std::optional<Witness> congruence_witness(const FactoredRF& lhs, const FactoredRF& rhs,
                                          const FactoredModulus& m);

Verdict congruent(const RationalFunction& lhs, const RationalFunction& rhs, const FactoredModulus& m);
Verdict congruent(const FactoredRF& lhs, const FactoredRF& rhs, const FactoredModulus& m);

// The polynomial of degree < deg(m) congruent to r modulo m. Throws
// std::domain_error when r's denominator shares a factor with m.
LaurentPolynomial residue(const RationalFunction& r, const LaurentPolynomial& m);

// r with r == r1 (mod m1) and r == r2 (mod m2), returned as the residue of
// degree < deg(m1 m2). Throws std::invalid_argument("CRT requires coprime
// moduli") when gcd(m1, m2) != 1.
LaurentPolynomial crt_combine(const RationalFunction& r1, const LaurentPolynomial& m1,
                              const RationalFunction& r2, const LaurentPolynomial& m2);

enum class WeightVariant { thm1, thm4 };

// The two CRT weights of the variant at specialized a and b; throws
// std::domain_error at a pole.
RationalFunction crt_weight(WeightVariant v, int which, long n, const LaurentPolynomial& a,
                            const LaurentPolynomial& b);

// Each weight equals 1 at the roots of its modulus in a (resp. b), for
// every sample of the other parameter. A sample that hits a pole is
// replaced by the next value from a stream seeded with seed.
Verdict crt_weight_check(long n, WeightVariant v, const std::vector<Rational>& samples,
                         std::uint64_t seed = 0);

// (1 - q^n)(1 + a^2 - a - a q^n) == (1 - a)^2 + (1 - a q^n)(a - q^n) as
// polynomials in a of degree 2.
Verdict key_identity_check(long n);

using PolyInA = std::array<LaurentPolynomial, 3>;
PolyInA key_identity_lhs(long n);
PolyInA key_identity_rhs(long n);

}  // namespace qck
