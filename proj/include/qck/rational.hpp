#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace qck {

// Exact coefficient domain. mpq_class keeps values canonical: the
// denominator is positive and coprime to the numerator, zero is 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

// Parses "7", "-3", "7/2". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);

// True when x = s^p for some rational s.
bool is_perfect_power(const Rational& x, unsigned long p);

// The prime divisors of |n| in increasing order (trial division).
std::vector<long> prime_divisors(long n);

// Positive divisors of n >= 1 in increasing order.
std::vector<long> divisors(long n);

long euler_phi(long n);

}  // namespace qck
