#include "support.hpp"

#include "qck/congruence.hpp"
#include "qck/drivers.hpp"

#include <doctest.h>

#include <random>

using namespace qck;
using qck::test::lp;
using qck::test::q;

namespace {

FactoredModulus single_factor(const LaurentPolynomial& f) {
  FactoredModulus m;
  m.factors = {{f, 1}};
  m.expanded = f;
  return m;
}

const ParamValue two = ParamValue::rational(2), three = ParamValue::rational(3);

// Random rational function whose denominator is prime to m.
RationalFunction random_unit_rf(std::mt19937_64& rng, const LaurentPolynomial& m) {
  for (;;) {
    LaurentPolynomial num = qck::test::random_lp(rng, -2, 6, 4);
    LaurentPolynomial den = qck::test::random_nonzero_lp(rng, 0, 3, 3);
    if (!gcd(den, m).is_constant()) continue;
    return rf_normalize(num, den);
  }
}

// Polynomial over a product of binomial atoms, none of them a divisor of q^n - 1.
FactoredRF random_factored(std::mt19937_64& rng) {
  static const Rational betas[] = {2, 3, -3, Rational(5, 7), Rational(-1, 2)};
  FactoredRF x = FactoredRF::from_polynomial(qck::test::random_nonzero_lp(rng, -1, 5, 3));
  for (int j = 0; j < 2; ++j) x *= FactoredRF::one_minus(betas[rng() % 5], 1 + static_cast<long>(rng() % 3)).inverse();
  return x;
}

bool holds(const RationalFunction& x, const RationalFunction& y, const FactoredModulus& m) {
  return !congruence_witness(x, y, m).has_value();
}

}  // namespace

TEST_CASE("congruent examples") {
  FactoredModulus m = build_modulus(5, 2);
  RationalFunction p = rf_normalize(lp({{0, 1}, {3, -2}}), lp({{0, 3}, {1, 1}}));
  CHECK(congruent(p, p, m).passed());
  CHECK(congruent(FactoredRF::q_integer(7), FactoredRF::q_integer(7), m).passed());
  // Phi_6 | q^6 - 1
  CHECK(congruent(RationalFunction(q(6)), RationalFunction(1), single_factor(cyclotomic(6))).passed());
  CHECK_FALSE(congruent(RationalFunction(q(5)), RationalFunction(1), single_factor(cyclotomic(6))).passed());
}

TEST_CASE("gcd obstruction is reported, not passed") {
  for (long n : {3L, 6L}) {
    Verdict v = congruent(RationalFunction(1) / RationalFunction(q(n) - LaurentPolynomial(1)), RationalFunction(0),
                          single_factor(cyclotomic(n)));
    CHECK(v.status == Status::fail);
    REQUIRE(v.witness);
    CHECK(v.witness->kind == "gcd_obstruction");
    CHECK(v.witness->factor_degree == euler_phi(n));
  }
  Verdict f = congruent(FactoredRF::q_integer(6).inverse(), FactoredRF::constant(0), build_modulus(6, 1));
  CHECK(f.witness->kind == "gcd_obstruction");
}

TEST_CASE("factor-by-factor witness") {
  // [5]^2 Phi_5 is divisible by [5] Phi_5^2 but not by [5] Phi_5^3
  FactoredRF x = FactoredRF::q_integer(5).pow(2) * FactoredRF::q_power(3);
  CHECK(congruent(x, FactoredRF::constant(0), build_modulus(5, 1)).passed());
  Verdict v = congruent(x, FactoredRF::constant(0), build_modulus(5, 2));
  REQUIRE(v.witness);
  CHECK(v.witness->kind == "not_divisible");
  CHECK(v.witness->factor == "Phi_5");
  CHECK(v.witness->required_multiplicity == 3);
  CHECK(v.witness->found_multiplicity == 2);
  // the generic path names the same factor
  Verdict g = congruent(x.to_rational_function(), RationalFunction(0), build_modulus(5, 2));
  REQUIRE(g.witness);
  CHECK(g.witness->kind == "not_divisible");
}

TEST_CASE("congruence is an equivalence compatible with ring operations") {
  std::mt19937_64 rng(11);
  for (long n : {2L, 3L, 4L, 6L}) {
    FactoredModulus m = build_modulus(n, 1);
    const RationalFunction M(m.expanded);
    for (int i = 0; i < 12; ++i) {
      RationalFunction x = random_unit_rf(rng, m.expanded);
      RationalFunction z = random_unit_rf(rng, m.expanded);
      RationalFunction y = x + M * random_unit_rf(rng, m.expanded);
      RationalFunction w = y + M * random_unit_rf(rng, m.expanded);
      CHECK(holds(x, x, m));
      CHECK(holds(x, y, m));
      CHECK(holds(y, x, m));
      CHECK(holds(x, w, m));
      CHECK(holds(x + z, y + z, m));
      CHECK(holds(x * z, y * z, m));
      CHECK(holds(x, z, m) == holds(z, x, m));
      // factored and generic paths agree
      FactoredRF fx = random_factored(rng), fz = random_factored(rng);
      const bool generic = holds(fx.to_rational_function(), fz.to_rational_function(), m);
      const bool factored = !congruence_witness(fx, fz, m).has_value();
      CHECK(generic == factored);
    }
  }
}

TEST_CASE("residue and crt_combine examples") {
  CHECK(residue(RationalFunction(q(3)), lp({{0, -2}, {1, 1}})) == LaurentPolynomial(8));
  // 1 mod (q - 2), 3 mod (q - 4) -> q - 1
  CHECK(crt_combine(RationalFunction(1), lp({{0, -2}, {1, 1}}), RationalFunction(3), lp({{0, -4}, {1, 1}})) ==
        lp({{0, -1}, {1, 1}}));
  const LaurentPolynomial r = lp({{0, 5}, {1, Rational(1, 2)}});
  CHECK(crt_combine(RationalFunction(r), cyclotomic(3), RationalFunction(r), cyclotomic(4)) == r);
  CHECK_THROWS_WITH_AS(crt_combine(RationalFunction(1), cyclotomic(5), RationalFunction(2), cyclotomic(5)),
                       "CRT requires coprime moduli", std::invalid_argument);
  CHECK_THROWS_AS(residue(RationalFunction(1) / RationalFunction(cyclotomic(3)), cyclotomic(3)), std::domain_error);
}

TEST_CASE("crt_combine reduces to its inputs on random moduli") {
  std::mt19937_64 rng(5);
  int done = 0;
  while (done < 100) {
    LaurentPolynomial m1 = qck::test::random_nonzero_lp(rng, 0, 1 + done % 2, 3);
    LaurentPolynomial m2 = qck::test::random_nonzero_lp(rng, 0, 2 - done % 2, 3);
    if (m1.max_exponent() < 1 || m2.max_exponent() < 1 || m1.coefficient(0) == 0 || m2.coefficient(0) == 0) continue;
    if (!gcd(m1, m2).is_constant()) continue;
    RationalFunction r1 = random_unit_rf(rng, m1 * m2), r2 = random_unit_rf(rng, m1 * m2);
    LaurentPolynomial r = crt_combine(r1, m1, r2, m2);
    CHECK(r.max_exponent() < (m1 * m2).max_exponent());
    CHECK(residue(RationalFunction(r), m1) == residue(r1, m1));
    CHECK(residue(RationalFunction(r), m2) == residue(r2, m2));
    ++done;
  }
}

TEST_CASE("CRT weights") {
  CHECK(crt_weight(WeightVariant::thm1, 1, 3, q(3), LaurentPolynomial(5)) == RationalFunction(1));
  CHECK(crt_weight(WeightVariant::thm1, 2, 3, LaurentPolynomial(7), q(3)) == RationalFunction(1));
  CHECK(crt_weight(WeightVariant::thm4, 1, 4, q(-4), LaurentPolynomial(2)) == RationalFunction(1));
  CHECK(crt_weight(WeightVariant::thm4, 2, 4, LaurentPolynomial(Rational(7, 2)), q(-4)) == RationalFunction(1));
  CHECK_THROWS_AS(crt_weight(WeightVariant::thm1, 1, 3, LaurentPolynomial(2), LaurentPolynomial(2)), std::domain_error);
  for (long n = 2; n <= 12; ++n) {
    CHECK(crt_weight_check(n, WeightVariant::thm1, default_samples()).passed());
    CHECK(crt_weight_check(n, WeightVariant::thm4, default_samples()).passed());
  }
  CHECK(crt_weight_check(1, WeightVariant::thm1, default_samples()).status == Status::rejected);
}

TEST_CASE("key identity") {
  for (long n : {1L, 2L, 5L, 30L}) CHECK(key_identity_check(n).passed());
  PolyInA l = key_identity_lhs(5), r = key_identity_rhs(5);
  CHECK(l[2] == LaurentPolynomial(1) - q(5));
  CHECK(r[2] == l[2]);
  CHECK(l[0] == LaurentPolynomial(1) - q(5));
}

TEST_CASE("theorem drivers") {
  CHECK(verify_thm1(3, 1).passed());
  CHECK(verify_thm1(4, 5).passed());
  CHECK(verify_thm1(3, 7).passed());
  CHECK(verify_thm5(1).passed());
  CHECK(verify_thm5(5).passed());
  CHECK(verify_thm3(4, 5, ParamValue::q_power(3)).passed());
  CHECK(verify_thm3(4, 1, two).passed());
  CHECK(verify_thm3(5, 11, ParamValue::rational(-3)).passed());
  CHECK(verify_liu_wang(1).passed());
  CHECK(verify_liu_wang(5).passed());
  CHECK(verify_liu_wang(9).passed());
  CHECK(verify_bachraoui(5).passed());
  CHECK(verify_bachraoui(25).passed());
  Verdict v = verify_thm1(4, 5);
  CHECK(v.case_id == "thm1/d=4/n=5");
  REQUIRE(v.modulus);
  CHECK(v.modulus->degree == 4 + 3 * 4);
}

TEST_CASE("composite n misses the proper divisors of n") {
  // Phi_n^(e+1) divides, Phi_f for f | n, 1 < f < n does not.
  Verdict v = verify_thm1(3, 4);
  CHECK(v.status == Status::fail);
  REQUIRE(v.witness);
  CHECK(v.witness->factor == "Phi_2");
  Verdict w = verify_thm5(9);
  REQUIRE(w.witness);
  CHECK(w.witness->factor == "Phi_3");
}

TEST_CASE("rejected cases") {
  CHECK(verify_thm1(2, 3).status == Status::rejected);
  CHECK(verify_thm1(3, 5).status == Status::rejected);
  CHECK(verify_thm5(6).status == Status::rejected);
  CHECK(verify_thm3(3, 4, two).status == Status::rejected);
  CHECK(verify_bachraoui(9).status == Status::rejected);
  CHECK(verify_liu_wang(3).status == Status::rejected);
}

TEST_CASE("negative controls fail") {
  for (auto p : {Perturbation::rhs_times_q, Perturbation::raised_modulus}) {
    CHECK_FALSE(verify_thm1(3, 1, p).passed());
    CHECK_FALSE(verify_thm1(4, 5, p).passed());
    CHECK_FALSE(verify_thm5(5, p).passed());
    CHECK_FALSE(verify_thm3(4, 5, two, p).passed());
    CHECK_FALSE(verify_liu_wang(5, p).passed());
    CHECK_FALSE(verify_bachraoui(5, p).passed());
  }
  CHECK(verify_thm5(5, Perturbation::rhs_times_q).case_id == "thm5/n=5/control=rhs*q");
}

TEST_CASE("verdicts are stable under a common q-power") {
  TermFamily f = TermFamily::thm1(4, 5);
  FactoredRF lhs = simplex_sum_factored({f, 3, 4}), r = rhs_factored(f);
  FactoredModulus m = build_modulus(5, 3);
  for (long j : {-7L, 1L, 4L}) {
    FactoredRF s = FactoredRF::q_power(j);
    CHECK_FALSE(congruence_witness(lhs * s, r * s, m).has_value());
    CHECK(congruence_witness(lhs * s, r * s * FactoredRF::q_power(1), m).has_value());
  }
}

TEST_CASE("lemma root specializations") {
  auto check = [](Lemma l, LemmaCheck c, long d, long n, ParamValue a, ParamValue b, std::optional<ParamValue> cc) {
    return run_lemma_case({l, c, d, n, a, b, cc, DenominatorVariant::corrected});
  };
  CHECK(check(Lemma::lem5, LemmaCheck::root_a, 3, 4, ParamValue::q_power(4), two, {}).passed());
  CHECK(check(Lemma::lem5, LemmaCheck::root_a, 3, 7, ParamValue::q_power(-7), ParamValue::rational(Rational(7, 2)), {})
            .passed());
  CHECK(check(Lemma::lem6, LemmaCheck::root_b, 4, 5, three, ParamValue::q_power(5), {}).passed());
  CHECK(check(Lemma::lem_thm4, LemmaCheck::root_a, 4, 5, ParamValue::q_power(-5), two, three).passed());
  CHECK(check(Lemma::lem_thm4, LemmaCheck::root_b, 4, 5, ParamValue::rational(5), ParamValue::q_power(5),
              ParamValue::q_power(3))
            .passed());
  CHECK(check(Lemma::lem5, LemmaCheck::truncation, 3, 7, ParamValue::q_power(7), two, {}).passed());
  CHECK(check(Lemma::lem5, LemmaCheck::mod_n, 3, 7, two, ParamValue::rational(-2), {}).passed());
  CHECK(check(Lemma::lem_thm4, LemmaCheck::mod_n, 4, 5, two, three, ParamValue::rational(Rational(5, 7))).passed());
  // generic a is not a root: the equality must fail
  CHECK(check(Lemma::lem5, LemmaCheck::root_a, 3, 4, three, two, {}).status == Status::fail);
  // c = q^(d-1) cancels the factor that makes the tail vanish mod [n]
  Verdict h = check(Lemma::lem_thm4, LemmaCheck::mod_n, 4, 5, two, three, ParamValue::q_power(3));
  CHECK(h.status == Status::hypothesis_not_satisfied);
  CHECK(check(Lemma::lem5, LemmaCheck::root_a, 2, 3, ParamValue::q_power(3), two, {}).status == Status::rejected);
}

TEST_CASE("lemma case enumeration") {
  auto s = default_samples();
  CHECK(lemma_cases(Lemma::lem5, 3, 4, s, s, {}).size() == 10 + 10 + 25);
  CHECK(lemma_cases(Lemma::lem6, 3, 4, s, s, {}).size() == 5 + 5 + 25);
  // root-a, root-b and truncation at both: 4 c samples; mod-n: 3 rational c
  CHECK(lemma_cases(Lemma::lem_thm4, 4, 5, s, s, default_c_samples(4)).size() == 4 * 40 + 3 * 25);
}

TEST_CASE("adjudications and specialization consistency") {
  CHECK(denominator_adjudication(4, 5, two, three).passed());
  CHECK(prefactor_exponent_adjudication(4, 5, two, three).passed());
  CHECK(specialization_consistency_check(5).passed());
  CHECK(specialization_consistency_check(13).passed());
}
