#include "qck/padic.hpp"

#include <doctest.h>

using namespace qck;

TEST_CASE("primality and residues") {
  CHECK(is_prime(2));
  CHECK(is_prime(41));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK_THROWS_AS(PadicResidue(9, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(PadicResidue(2, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(PadicResidue(5, 0, 1), std::invalid_argument);
  PadicResidue x(5, 2, -1);
  CHECK(x.value() == 24);
  CHECK(PadicResidue::from_rational(5, 2, Rational(1, 2)).value() == 13);
  CHECK((x * x).value() == 1);
  CHECK(x.inverse() == x);
  CHECK_THROWS_AS(PadicResidue(5, 2, 10).inverse(), std::domain_error);
  CHECK(PadicResidue(5, 3, 126).reduced(2).value() == 1);
}

TEST_CASE("padic_gamma examples") {
  CHECK(padic_gamma(1, 13, 3).value() == 13 * 13 * 13 - 1);
  CHECK(padic_gamma(2, 13, 3).value() == 1);
  // 1/2 = 7 mod 13: (-1)^7 6! = -720 = 8 mod 13
  CHECK(padic_gamma(Rational(1, 2), 13, 1).value() == 8);
  PadicResidue h = padic_gamma(Rational(1, 2), 13, 1);
  CHECK((h * h).value() == 12);
  CHECK_THROWS_AS(padic_gamma(Rational(1, 13), 13, 2), std::invalid_argument);
}

TEST_CASE("Pochhammer recurrence matches the direct product") {
  Rational prev = 1;
  for (long k = 1; k <= 50; ++k) {
    Rational direct = 1;
    for (long i = 0; i < k; ++i) direct *= Rational(1, 4) + i;
    prev *= Rational(1, 4) + (k - 1);
    CHECK(pochhammer(Rational(1, 4), k) == direct);
    CHECK(prev == direct);
  }
  CHECK(pochhammer(3, 0) == 1);
  CHECK(pochhammer(1, 5) == 120);
}

TEST_CASE("padic_gamma properties") {
  for (long p : {5L, 7L, 13L}) CHECK(padic_gamma_sanity(p).passed());
  for (long p : {5L, 7L, 13L, 29L})
    for (long m = 2; m <= 3 * p; ++m) {
      const PadicResidue factor(p, 3, m % p == 0 ? -1 : -m);
      CHECK(padic_gamma(m + 1, p, 3) == factor * padic_gamma(m, p, 3));
    }
}

TEST_CASE("classical supercongruences") {
  for (long p : {13L, 17L, 29L, 37L, 41L}) CHECK(verify_g2(p).passed());
  for (long p : {7L, 13L, 19L, 31L, 37L}) CHECK(verify_he(p).passed());
  CHECK(verify_g2(5).passed());
  CHECK(verify_g2(7).status == Status::rejected);
  CHECK(verify_g2(21).status == Status::rejected);
  CHECK(verify_he(5).status == Status::rejected);
  CHECK(verify_he(3).status == Status::rejected);
  Verdict c = verify_g2(13, true);
  CHECK(c.status == Status::fail);
  REQUIRE(c.witness);
  CHECK(c.witness->kind == "residue_mismatch");
  CHECK_FALSE(verify_he(7, true).passed());
}
