#include "oracle.hpp"
#include "support.hpp"

#include "qck/qseries.hpp"

#include <doctest.h>

using namespace qck;
using qck::test::lp;
using qck::test::oracle_term;

namespace {

const ParamValue two = ParamValue::rational(2), three = ParamValue::rational(3);

std::vector<TermFamily> sample_families() {
  return {TermFamily::thm1(3, 7),
          TermFamily::thm1(5, 6),
          TermFamily::cor_d3(4),
          TermFamily::g2_quad(5),
          TermFamily::thm3(4, 5, ParamValue::rational(Rational(5, 7))),
          TermFamily::thm3(4, 9, ParamValue::q_power(3)),
          TermFamily::lem5(3, 4, ParamValue::q_power(4), two),
          TermFamily::lem5(4, 5, ParamValue::rational(Rational(7, 2)), ParamValue::q_power(5)),
          TermFamily::thm4(4, 5, ParamValue::q_power(-5), two, three),
          TermFamily::thm4(4, 5, two, ParamValue::rational(-2), ParamValue::q_power(3)),
          TermFamily::thm4(4, 5, ParamValue::q_power(5), two, three, DenominatorVariant::literal),
          TermFamily::liu_wang(9),
          TermFamily::bachraoui(7)};
}

}  // namespace

TEST_CASE("parse_param") {
  CHECK(parse_param("7/2", 4, 5) == ParamValue::rational(Rational(7, 2)));
  CHECK(parse_param("-3", 4, 5) == ParamValue::rational(-3));
  CHECK(parse_param("q", 4, 5) == ParamValue::q_power(1));
  CHECK(parse_param("q^-5", 4, 5) == ParamValue::q_power(-5));
  CHECK(parse_param("q^n", 4, 9) == ParamValue::q_power(9));
  CHECK(parse_param("q^-n", 4, 9) == ParamValue::q_power(-9));
  CHECK(parse_param("q^(d-1)", 5, 6) == ParamValue::q_power(4));
  CHECK(ParamValue::q_power(5).to_string() == "q^5");
  CHECK(ParamValue::q_power(1).to_string() == "q");
  CHECK(ParamValue::rational(2).to_string() == "2");
  CHECK_THROWS(parse_param("x", 4, 5));
  CHECK_THROWS(parse_param("0", 4, 5));
}

TEST_CASE("q-shifted factorial examples") {
  CHECK(qpoch({1, 1}, 1, 0) == LaurentPolynomial(1));
  CHECK(qpoch({1, 1}, 1, 3) == lp({{0, 1}, {1, -1}}) * lp({{0, 1}, {2, -1}}) * lp({{0, 1}, {3, -1}}));
  // (2q; q^3)_2 = (1 - 2q)(1 - 2q^4)
  CHECK(qpoch({2, 1}, 3, 2) == lp({{0, 1}, {1, -2}}) * lp({{0, 1}, {4, -2}}));
  // (q^-1; q)_2 = (1 - q^-1)(1 - 1) = 0
  CHECK(qpoch({1, -1}, 1, 2).is_zero());
  CHECK(qpoch_factored({1, 1}, 4, 3).to_rational_function() == RationalFunction(qpoch({1, 1}, 4, 3)));
}

TEST_CASE("summands match the direct definitions") {
  for (const TermFamily& f : sample_families()) {
    CAPTURE(f.name());
    for (long k = 0; k <= 6; ++k) {
      CAPTURE(k);
      CHECK(term(f, k) == oracle_term(f, k));
    }
  }
}

TEST_CASE("summand values at small k") {
  // c(0) = 1 for every family
  for (const TermFamily& f : sample_families()) CHECK(term(f, 0) == RationalFunction(1));
  // d = 3: c(1) = [7] (1-q)^4 / (1-q^3)^4 q
  RationalFunction expected = RationalFunction(q_integer(7)) * RationalFunction(pow(lp({{0, 1}, {1, -1}}), 4)) /
                              RationalFunction(pow(lp({{0, 1}, {3, -1}}), 4)) * RationalFunction(lp({{1, 1}}));
  CHECK(term(TermFamily::thm1(3, 4), 1) == expected);
  // at a = q^n the tail above (n-1)/d vanishes
  TermFamily f = TermFamily::lem5(3, 7, ParamValue::q_power(7), two);
  CHECK_FALSE(term(f, 2).is_zero());
  for (long k = 3; k < 7; ++k) CHECK(term(f, k).is_zero());
}

TEST_CASE("right sides") {
  CHECK(rhs(TermFamily::thm1(3, 1)) == RationalFunction(1));
  CHECK(rhs(TermFamily::g2_quad(1)) == RationalFunction(1));
  CHECK(rhs(TermFamily::liu_wang(1)) == RationalFunction(1));
  // [4]^3 q^-3 (1-q^2)^3 / (1-q^3)^3
  using qck::test::mono;
  RationalFunction r = pow(RationalFunction(q_integer(4)), 3) * mono(1, -3) *
                       pow(RationalFunction(lp({{0, 1}, {2, -1}})) / RationalFunction(lp({{0, 1}, {3, -1}})), 3);
  CHECK(rhs(TermFamily::thm1(3, 4)) == r);
  CHECK(rhs(TermFamily::bachraoui(5)) == mono(1, -4) * pow(RationalFunction(q_integer(5)), 2));
  // the c = q^3 right side is the quadruple-sum right side
  CHECK(rhs(TermFamily::thm3(4, 5, ParamValue::q_power(3))) == rhs(TermFamily::g2_quad(5)));
}

TEST_CASE("closed forms against direct sums") {
  using qck::test::mono;
  using qck::test::poch;
  using qck::test::qint;
  const long d = 3, n = 7, m = 2;
  const RationalFunction q = mono(1, 1), qd = mono(1, d), b = mono(2, 0), a = mono(3, 0);
  RationalFunction l5 = qint(n) * pow(b / q, m) * poch(mono(1, 2) / b, d, m) / poch(b * qd, d, m);
  CHECK(lem5_single_closed_form(d, n, two).to_rational_function() == l5);
  RationalFunction l6 = qint(n) * poch(q, d, m) * poch(mono(1, d - 1), d, m) / (poch(a * qd, d, m) * poch(qd / a, d, m));
  CHECK(lem6_single_closed_form(d, n, three).to_rational_function() == l6);
  CHECK(lem6_rhs(d, n, three).to_rational_function() == pow(l6, 3));
}

TEST_CASE("family hypotheses") {
  CHECK_THROWS_AS(TermFamily::thm1(2, 3).validate(), std::invalid_argument);
  CHECK_THROWS_AS(TermFamily::thm1(3, 5).validate(), std::invalid_argument);
  CHECK_THROWS_AS(TermFamily::g2_quad(6).validate(), std::invalid_argument);
  CHECK_THROWS_AS(TermFamily::thm3(3, 4, two).validate(), std::invalid_argument);
  CHECK_THROWS_AS(TermFamily::bachraoui(9).validate(), std::invalid_argument);
  CHECK_NOTHROW(TermFamily::bachraoui(25).validate());
  CHECK(TermFamily::lem5(4, 5, ParamValue::q_power(5), two).name() == "lem5(d=4,n=5,a=q^5,b=2)");
  CHECK(to_string(FamilyId::g2_quad) == "thm5");
}

TEST_CASE("parameter poles and reducible factors") {
  // a = 1 makes (q^d/a;q^d)_k and (aq;q^d)_k share factors but no pole;
  // b = q^-d puts 1 - b q^d = 0 in the denominator
  CHECK_THROWS_AS(term(TermFamily::lem5(3, 4, two, ParamValue::q_power(-3)), 1), std::domain_error);
  // 1 - 4q^4 = (1 - 2q^2)(1 + 2q^2)
  CHECK_THROWS_WITH(term(TermFamily::lem5(4, 5, two, ParamValue::rational(4)), 1),
                    doctest::Contains("reducible binomial factor"));
}
