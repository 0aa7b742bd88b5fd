#include "support.hpp"

#include "qck/cyclotomic.hpp"

#include <doctest.h>

#include <thread>

using namespace qck;
using qck::test::lp;

TEST_CASE("cyclotomic examples") {
  CHECK(cyclotomic(1) == lp({{1, 1}, {0, -1}}));
  CHECK(cyclotomic(4) == lp({{2, 1}, {0, 1}}));
  CHECK(cyclotomic(6) == lp({{2, 1}, {1, -1}, {0, 1}}));
  CHECK_THROWS_AS(cyclotomic(0), std::invalid_argument);
}

TEST_CASE("q-integer examples") {
  CHECK(q_integer(1) == LaurentPolynomial(1));
  CHECK(q_integer(3) == lp({{0, 1}, {1, 1}, {2, 1}}));
  CHECK(q_integer(0).is_zero());
}

TEST_CASE("build_modulus examples") {
  CHECK(build_modulus(2, 0).expanded == lp({{0, 1}, {1, 1}}));
  CHECK(build_modulus(4, 2).expanded == q_integer(4) * pow(lp({{2, 1}, {0, 1}}), 2));
  CHECK(build_modulus(1, 3).expanded == pow(lp({{1, 1}, {0, -1}}), 3));
  auto m = build_modulus(6, 3);
  CHECK(m.factors.size() == 2);
  CHECK_FALSE(m.pairwise_coprime.has_value());
  check_pairwise_coprime(m);
  CHECK(*m.pairwise_coprime == false);  // Phi_6 divides [6]
  CHECK(m.describe() == "[6]*Phi_6^3");
}

TEST_CASE("lcm identities") {
  for (long n : {2, 4, 5}) {
    CHECK(lcm_identity_check(n, 4));
    CHECK(lcm_identity_check(n, 5));
  }
}

TEST_CASE("cyclotomic product identities up to 200") {
  for (long n = 1; n <= 200; ++n) {
    LaurentPolynomial all(1), proper(1);
    for (long d : divisors(n)) {
      all *= cyclotomic(d);
      if (d > 1) proper *= cyclotomic(d);
    }
    CHECK(all == LaurentPolynomial::q(n) - LaurentPolynomial(1));
    CHECK(proper == q_integer(n));
    CHECK(cyclotomic(n).max_exponent() == euler_phi(n));
    CHECK(cyclotomic(n).coefficient(0) == (n == 1 ? -1 : 1));
  }
}

TEST_CASE("memo tolerates concurrent readers") {
  std::vector<std::thread> threads;
  std::vector<LaurentPolynomial> out(8);
  for (int i = 0; i < 8; ++i)
    threads.emplace_back([&, i] { out[static_cast<std::size_t>(i)] = cyclotomic(210 + (i % 2)); });
  for (auto& t : threads) t.join();
  for (int i = 2; i < 8; ++i) CHECK(out[static_cast<std::size_t>(i)] == out[static_cast<std::size_t>(i % 2)]);
}
