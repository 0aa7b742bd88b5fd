#pragma once

// Independent oracles: summands written straight from their definitions in
// plain RationalFunction arithmetic, with no factored representation and no
// convolution.

#include "qck/cyclotomic.hpp"
#include "qck/qseries.hpp"
#include "qck/rational_function.hpp"

#include <functional>

namespace qck::test {

// coeff * q^exp as a rational function
inline RationalFunction mono(const Rational& coeff, long exp) {
  return RationalFunction(LaurentPolynomial::monomial(coeff, exp));
}

inline RationalFunction mono(const ParamValue& p) {
  return p.kind == ParamValue::Kind::rational ? mono(p.value, 0) : mono(1, p.exponent);
}

// (x; q^step)_k
inline RationalFunction poch(const RationalFunction& x, long step, long k) {
  RationalFunction r(1);
  for (long i = 0; i < k; ++i) r = r * (RationalFunction(1) - x * mono(1, step * i));
  return r;
}

inline RationalFunction qint(long n) { return RationalFunction(q_integer(n)); }

inline RationalFunction oracle_term(const TermFamily& f, long k) {
  const long d = f.d;
  const RationalFunction q = mono(1, 1), qd = mono(1, d);
  const RationalFunction base = qint(2 * d * k + 1);
  switch (f.id) {
    case FamilyId::thm1:
    case FamilyId::cor_d3:
    case FamilyId::g2_quad:
    case FamilyId::liu_wang:
      return base * pow(poch(q, d, k), 4) / pow(poch(qd, d, k), 4) * mono(1, (d - 2) * k);
    case FamilyId::thm3: {
      RationalFunction c = mono(*f.c);
      return base * pow(poch(q, d, k), 5) * poch(c * q, d, k) / (pow(poch(qd, d, k), 5) * poch(qd / c, d, k)) *
             pow(mono(1, 2 * d - 3) / c, k);
    }
    case FamilyId::lem5: {
      RationalFunction a = mono(*f.a), b = mono(*f.b);
      return base * poch(q, d, k) * poch(a * q, d, k) * poch(q / a, d, k) * poch(q / b, d, k) /
             (poch(qd, d, k) * poch(a * qd, d, k) * poch(qd / a, d, k) * poch(b * qd, d, k)) * pow(b, k) *
             mono(1, (d - 2) * k);
    }
    case FamilyId::thm4: {
      RationalFunction a = mono(*f.a), b = mono(*f.b), c = mono(*f.c);
      RationalFunction first = f.variant == DenominatorVariant::corrected ? poch(qd / a, d, k) : poch(qd / q, d, k);
      return base * poch(a * q, d, k) * poch(q / a, d, k) * poch(b * q, d, k) * poch(q / b, d, k) *
             poch(c * q, d, k) * poch(q, d, k) /
             (first * poch(a * qd, d, k) * poch(b * qd, d, k) * poch(qd / b, d, k) * poch(qd / c, d, k) *
              poch(qd, d, k)) *
             pow(mono(1, 2 * d - 3) / c, k);
    }
    case FamilyId::bachraoui:
      return qint(8 * k + 1) * pow(poch(q, 2, k), 2) * poch(q, 2, 2 * k) * mono(1, 2 * k * k) /
             (pow(poch(mono(1, 6), 6, k), 2) * poch(mono(1, 2), 2, 2 * k));
  }
  return {};
}

// Entry s is the sum over k_1 + ... + k_t = s of c(k_1) ... c(k_t), for
// s <= N, by nested loops over every tuple.
template <class T>
std::vector<T> naive_compositions(const std::vector<T>& c, int t, long N) {
  std::vector<T> bucket(static_cast<std::size_t>(N) + 1, T(0));
  std::function<void(int, long, const T&)> rec = [&](int left, long budget, const T& acc) {
    if (left == 0) {
      auto& slot = bucket[static_cast<std::size_t>(N - budget)];
      slot = slot + acc;
      return;
    }
    for (long k = 0; k <= budget; ++k) {
      const T& ck = c[static_cast<std::size_t>(k)];
      if (ck == T(0)) continue;
      rec(left - 1, budget - k, acc * ck);
    }
  };
  rec(t, N, T(1));
  return bucket;
}

// Entry N is the simplex sum over k_1 + ... + k_t <= N.
template <class T>
std::vector<T> naive_simplex_all(const std::vector<T>& c, int t, long N) {
  std::vector<T> out = naive_compositions(c, t, N);
  for (std::size_t s = 1; s < out.size(); ++s) out[s] = out[s - 1] + out[s];
  return out;
}

// naive_simplex_all for rational functions written on a common denominator
// D = lcm of the term denominators: every tuple contributes
// prod P(k_i) / D^t, summed as polynomials and normalized once per N.
inline std::vector<RationalFunction> naive_simplex_rf(const std::vector<RationalFunction>& c, int t, long N) {
  LaurentPolynomial D(1);
  for (long k = 0; k <= N; ++k) {
    const LaurentPolynomial& den = c[static_cast<std::size_t>(k)].den();
    D = divrem(D * den, gcd(D, den)).quotient;
  }
  std::vector<LaurentPolynomial> P;
  for (long k = 0; k <= N; ++k) {
    const RationalFunction& ck = c[static_cast<std::size_t>(k)];
    P.push_back(ck.num() * divrem(D, ck.den()).quotient);
  }
  const LaurentPolynomial Dt = pow(D, t);
  std::vector<RationalFunction> out;
  for (const auto& p : naive_simplex_all(P, t, N)) out.push_back(rf_normalize(p, Dt));
  return out;
}

}  // namespace qck::test
