#pragma once

#include "qck/factored.hpp"
#include "qck/qseries.hpp"
#include "qck/verdict.hpp"

#include <vector>

namespace qck {

struct SumSpec {
  TermFamily family;
  int t = 1;
  long N = 0;
};

// term(f, 0), ..., term(f, N)
std::vector<FactoredRF> family_terms(const TermFamily& f, long N);

FactoredRF truncated_sum_factored(const TermFamily& f, long M);
RationalFunction truncated_sum(const TermFamily& f, long M);

// Sum over k_1 + ... + k_t <= N of c(k_1)...c(k_t), by truncated
// convolution of the sequence with itself; c must hold at least N+1 terms.
FactoredRF simplex_sum(const std::vector<FactoredRF>& c, int t, long N);
FactoredRF simplex_sum_factored(const SumSpec& spec);
RationalFunction simplex_sum(const SumSpec& spec);

// Checks that the simplex sum up to n-1 equals the t-th power of the sum up
// to (n-1)/d, when every term strictly between (n-1)/d and n vanishes and
// t (n-1)/d <= n-1. Otherwise the verdict is hypothesis_not_satisfied.
Verdict power_identity_check(const TermFamily& f, int t);

// Checks, by brute force on both sides, that the t-fold convolution of c at
// ln+k factors into its value at k times the t-fold convolution of the
// block values c(0), c(n), c(2n), ... at l, for all l <= L and k < n.
// Hypotheses: c(0) = 1, c(ln) != 0, c(ln+k) = c(ln) c(k), and c(k) = 0 for
// (n-1)/t < k < n (without the last one the identity is false, e.g. c = 1).
Verdict block_factorization_check(const std::vector<Rational>& c, long n, int t, long L);

}  // namespace qck
