#include "qck/congruence.hpp"

#include <random>
#include <stdexcept>

namespace qck {

namespace {

Witness gcd_obstruction(const std::string& factor, long degree) {
  return {"gcd_obstruction", factor, degree, {}, {}, {}, "denominator shares a factor with the modulus"};
}

// Power of q with nonnegative exponent that clears the Laurent part of p.
LaurentPolynomial as_polynomial(const LaurentPolynomial& p) {
  return p.min_exponent() < 0 ? p.shifted(-p.min_exponent()) : p;
}

long required_multiplicity(const FactoredModulus& m, long f) {
  long r = 0;
  if (f > 1 && m.n % f == 0) r += 1;
  if (f == m.n) r += m.e;
  return r;
}

}  // namespace

std::optional<Witness> congruence_witness(const RationalFunction& lhs, const RationalFunction& rhs,
                                          const FactoredModulus& m) {
  RationalFunction diff = lhs - rhs;
  if (diff.is_zero()) return std::nullopt;
  LaurentPolynomial g = gcd(diff.den(), m.expanded);
  if (!g.is_constant()) return gcd_obstruction(g.to_string(), g.max_exponent());
  LaurentPolynomial num = as_polynomial(diff.num());
  auto [quot, rem] = divrem(num, m.expanded);
  if (rem.is_zero()) return std::nullopt;
  // Name the first factor whose full power does not divide.
  for (const auto& [factor, mult] : m.factors) {
    LaurentPolynomial rest = num;
    for (int i = 0; i < mult; ++i) {
      auto [fq, fr] = divrem(rest, factor);
      if (!fr.is_zero()) {
        return Witness{"not_divisible", factor.to_string(), factor.max_exponent(),
                       fr.is_zero() ? 0 : fr.max_exponent(), mult, i, ""};
      }
      rest = fq;
    }
  }
  return Witness{"not_divisible", m.describe(), m.degree(), rem.max_exponent(), {}, {},
                 "factors divide separately but not their product"};
}

std::optional<Witness> congruence_witness(const FactoredRF& lhs, const FactoredRF& rhs,
                                          const FactoredModulus& m) {
  FactoredRF diff = lhs - rhs;
  if (diff.is_zero()) return std::nullopt;

  std::optional<Witness> factorwise;
  for (long f : divisors(m.n)) {
    const long need = required_multiplicity(m, f);
    if (need == 0) continue;
    const Atom atom{f, 0};
    const long v = diff.valuation(atom);
    if (v < 0) {
      factorwise = gcd_obstruction(atom.to_string(), euler_phi(f));
      break;
    }
    if (v < need) {
      // Remainder of the part left after removing the found multiplicity.
      LaurentPolynomial rest = as_polynomial(diff.expanded_numerator());
      LaurentPolynomial phi = cyclotomic(f);
      for (long i = 0; i < v; ++i) rest = divrem(rest, phi).quotient;
      LaurentPolynomial r = divrem(rest, phi).remainder;
      factorwise = Witness{"not_divisible", atom.to_string(), euler_phi(f), r.max_exponent(), need, v,
                           ""};
      break;
    }
  }

  // Cross-check against the expanded modulus.
  LaurentPolynomial den = diff.expanded_denominator();
  bool obstruction = !gcd(den, m.expanded).is_constant();
  bool divisible = false;
  if (!obstruction) {
    ScaledIntPoly num = to_scaled_int_poly(diff.expanded_numerator());
    ScaledIntPoly mod = to_scaled_int_poly(m.expanded);
    divisible = detail::divide_exact(num.poly, mod.poly).has_value();
  }
  const bool factor_pass = !factorwise.has_value();
  const bool factor_obstruction = factorwise && factorwise->kind == "gcd_obstruction";
  if (factor_obstruction != obstruction || (!obstruction && factor_pass != divisible))
    throw std::logic_error("factor-by-factor and expanded divisibility disagree");
  return factorwise;
}

Verdict congruent(const RationalFunction& lhs, const RationalFunction& rhs, const FactoredModulus& m) {
  Verdict v = make_verdict("congruence", {});
  v.modulus = ModulusSummary{m.n, m.e, m.degree(), m.describe()};
  if (auto w = congruence_witness(lhs, rhs, m)) fail_with(v, *w);
  return v;
}

Verdict congruent(const FactoredRF& lhs, const FactoredRF& rhs, const FactoredModulus& m) {
  Verdict v = make_verdict("congruence", {});
  v.modulus = ModulusSummary{m.n, m.e, m.degree(), m.describe()};
  if (auto w = congruence_witness(lhs, rhs, m)) fail_with(v, *w);
  return v;
}

namespace {

// Remainder of degree < deg(m) for monic m; divrem only bounds the span, q being a unit there.
LaurentPolynomial poly_mod(LaurentPolynomial x, const LaurentPolynomial& m) {
  if (x.min_exponent() < 0) {
    // q (m - m0)/q == -m0 (mod m), so q^-1 == -(m - m0)/(q m0)
    const Rational m0 = m.coefficient(0);
    if (m0 == 0) throw std::domain_error("denominator not coprime to modulus");
    const LaurentPolynomial q_inv = (m - LaurentPolynomial(m0)).shifted(-1) * Rational(-1 / m0);
    const long k = -x.min_exponent();
    LaurentPolynomial r = poly_mod(x.shifted(k), m);
    for (long i = 0; i < k; ++i) r = poly_mod(r * q_inv, m);
    return r;
  }
  const long deg = m.max_exponent();
  while (!x.is_zero() && x.max_exponent() >= deg) {
    const long shift = x.max_exponent() - deg;
    x -= m.shifted(shift) * x.leading_coefficient();
  }
  return x;
}

}  // namespace

LaurentPolynomial residue(const RationalFunction& r, const LaurentPolynomial& m) {
  if (m.is_zero()) throw std::domain_error("zero modulus");
  LaurentPolynomial mod = m.monic();
  if (mod.min_exponent() > 0) throw std::domain_error("modulus divisible by q");
  if (mod.is_constant()) return {};
  auto [g, u, v] = ext_gcd(r.den(), mod);
  if (!g.is_constant()) throw std::domain_error("denominator not coprime to modulus");
  // u den == g (mod m), g a nonzero constant
  return poly_mod(r.num() * u * Rational(1 / g.coefficient(0)), mod);
}

LaurentPolynomial crt_combine(const RationalFunction& r1, const LaurentPolynomial& m1,
                              const RationalFunction& r2, const LaurentPolynomial& m2) {
  LaurentPolynomial a = m1.monic(), b = m2.monic();
  auto [g, u, v] = ext_gcd(a, b);
  if (!g.is_constant()) throw std::invalid_argument("CRT requires coprime moduli");
  const Rational ginv = 1 / g.coefficient(0);
  u = u * ginv;
  v = v * ginv;
  LaurentPolynomial x1 = residue(r1, a), x2 = residue(r2, b);
  LaurentPolynomial ab = a * b;
  // u a + v b == 1: x1 v b is x1 mod a and 0 mod b, and symmetrically.
  LaurentPolynomial r = poly_mod(x1 * v * b + x2 * u * a, ab);
  if (!(residue(r, a) == x1) || !(residue(r, b) == x2)) throw std::logic_error("CRT re-reduction failed");
  return r;
}

RationalFunction crt_weight(WeightVariant variant, int which, long n, const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  const LaurentPolynomial one(1), qn = LaurentPolynomial::q(n);
  LaurentPolynomial num, den;
  if (variant == WeightVariant::thm1) {
    den = (a - b) * (one - a * b);
    if (which == 1)
      num = (b - qn) * (a * b - one - a * a + a * qn);
    else
      num = (one - a * qn) * (a - qn);
  } else {
    if (which == 1) {
      num = (one - b * qn) * (b - qn) * (-one - a * a + a * qn);
      den = (a - b) * (one - a * b);
    } else {
      num = (one - a * qn) * (a - qn) * (-one - b * b + b * qn);
      den = (b - a) * (one - a * b);
    }
  }
  if (den.is_zero()) throw std::domain_error("parameter pole");
  return rf_normalize(num, den);
}

Verdict crt_weight_check(long n, WeightVariant variant, const std::vector<Rational>& samples,
                         std::uint64_t seed) {
  Verdict v = make_verdict("crt-weights", {{"n", std::to_string(n)},
                                           {"variant", variant == WeightVariant::thm1 ? "thm1" : "lem-thm4"}});
  if (n < 2) {
    reject_with(v, "n must be at least 2");
    return v;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(-50, 50);
  auto next_sample = [&]() {
    for (;;) {
      long num = pick(rng), den = pick(rng);
      if (num != 0 && den > 0) {
        Rational x(num, den);
        x.canonicalize();
        return x;
      }
    }
  };
  const LaurentPolynomial qn = LaurentPolynomial::q(n), qmn = LaurentPolynomial::q(-n);
  std::vector<LaurentPolynomial> a_roots{qn, qmn};
  std::vector<LaurentPolynomial> b_roots{qn};
  if (variant == WeightVariant::thm4) b_roots.push_back(qmn);

  auto check = [&](int which, const LaurentPolynomial& root, bool root_is_a) -> bool {
    for (const Rational& s0 : samples) {
      Rational s = s0;
      for (int attempt = 0;; ++attempt) {
        LaurentPolynomial x(s);
        try {
          RationalFunction w = root_is_a ? crt_weight(variant, which, n, root, x)
                                         : crt_weight(variant, which, n, x, root);
          if (!(w == RationalFunction(1))) {
            fail_with(v, {"not_one", {}, {}, {}, {}, {},
                          "weight " + std::to_string(which) + " at " + (root_is_a ? "a=" : "b=") +
                              root.to_string() + ", sample " + s.get_str() + ": " + w.to_string()});
            return false;
          }
          break;
        } catch (const std::domain_error&) {
          if (attempt >= 8) {
            fail_with(v, {"parameter_pole", {}, {}, {}, {}, {}, "no pole-free sample after retries"});
            return false;
          }
          s = next_sample();
        }
      }
    }
    return true;
  };
  for (const auto& r : a_roots)
    if (!check(1, r, true)) return v;
  for (const auto& r : b_roots)
    if (!check(2, r, false)) return v;
  return v;
}

namespace {

PolyInA mul(const PolyInA& x, const PolyInA& y) {
  PolyInA r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; i + j < 3; ++j) r[static_cast<std::size_t>(i + j)] += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
  return r;
}

PolyInA add(const PolyInA& x, const PolyInA& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2]}; }

}  // namespace

PolyInA key_identity_lhs(long n) {
  const LaurentPolynomial one(1), qn = LaurentPolynomial::q(n);
  PolyInA left{one - qn, {}, {}};
  PolyInA right{one, -one - qn, one};
  return mul(left, right);
}

PolyInA key_identity_rhs(long n) {
  const LaurentPolynomial one(1), qn = LaurentPolynomial::q(n);
  PolyInA one_minus_a{one, -one, {}};
  PolyInA x{one, -qn, {}};
  PolyInA y{-qn, one, {}};
  return add(mul(one_minus_a, one_minus_a), mul(x, y));
}

Verdict key_identity_check(long n) {
  Verdict v = make_verdict("key-identity", {{"n", std::to_string(n)}});
  if (n < 1) {
    reject_with(v, "n must be positive");
    return v;
  }
  PolyInA l = key_identity_lhs(n), r = key_identity_rhs(n);
  for (std::size_t i = 0; i < 3; ++i)
    if (!(l[i] == r[i])) {
      fail_with(v, {"not_equal", {}, {}, {}, {}, {},
                    "coefficient of a^" + std::to_string(i) + ": " + l[i].to_string() + " vs " + r[i].to_string()});
      break;
    }
  return v;
}

}  // namespace qck
