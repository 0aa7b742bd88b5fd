#include "qck/multisum.hpp"

#include <functional>
#include <stdexcept>

namespace qck {

namespace {

using Seq = std::vector<FactoredRF>;

// (A * B)[s] for s <= N
Seq convolve(const Seq& a, const Seq& b, long N) {
  const bool square = &a == &b;
  Seq out(static_cast<std::size_t>(N) + 1);
  for (long s = 0; s <= N; ++s) {
    std::vector<FactoredRF> parts;
    for (long i = 0; i <= s; ++i) {
      const long j = s - i;
      if (square && i > j) break;
      const FactoredRF& x = a[static_cast<std::size_t>(i)];
      const FactoredRF& y = b[static_cast<std::size_t>(j)];
      if (x.is_zero() || y.is_zero()) continue;
      FactoredRF p = x * y;
      if (square && i < j) p = p * FactoredRF::constant(2);
      parts.push_back(std::move(p));
    }
    out[static_cast<std::size_t>(s)] = sum(parts);
  }
  return out;
}

Seq prefix_sums(const Seq& a, long N) {
  Seq out(static_cast<std::size_t>(N) + 1);
  for (long s = 0; s <= N; ++s) {
    const auto i = static_cast<std::size_t>(s);
    out[i] = s == 0 ? a[0] : out[i - 1] + a[i];
  }
  return out;
}

Seq convolution_power(const Seq& c, int h, long N) {
  Seq p(c.begin(), c.begin() + N + 1);
  if (h == 1) return p;
  if (h % 2 == 0) {
    Seq half = convolution_power(c, h / 2, N);
    return convolve(half, half, N);
  }
  Seq rest = convolution_power(c, h - 1, N);
  return convolve(rest, p, N);
}

Rational composition_sum(const std::vector<Rational>& c, int t, long total) {
  // sum over k_1 + ... + k_t = total of prod c(k_i)
  std::function<Rational(int, long)> rec = [&](int left, long remaining) -> Rational {
    if (left == 1) return c[static_cast<std::size_t>(remaining)];
    Rational acc = 0;
    for (long k = 0; k <= remaining; ++k) {
      const Rational& ck = c[static_cast<std::size_t>(k)];
      if (ck == 0) continue;
      acc += ck * rec(left - 1, remaining - k);
    }
    return acc;
  };
  return rec(t, total);
}

}  // namespace

std::vector<FactoredRF> family_terms(const TermFamily& f, long N) {
  std::vector<FactoredRF> out;
  out.reserve(static_cast<std::size_t>(N) + 1);
  for (long k = 0; k <= N; ++k) out.push_back(term_factored(f, k));
  return out;
}

FactoredRF truncated_sum_factored(const TermFamily& f, long M) {
  if (M < 0) throw std::invalid_argument("truncation point must be nonnegative");
  return sum(family_terms(f, M));
}

RationalFunction truncated_sum(const TermFamily& f, long M) {
  return truncated_sum_factored(f, M).to_rational_function();
}

FactoredRF simplex_sum(const std::vector<FactoredRF>& c, int t, long N) {
  if (t < 1) throw std::invalid_argument("fold count must be positive");
  if (N < 0) return {};
  if (static_cast<long>(c.size()) <= N) throw std::invalid_argument("sequence shorter than the simplex bound");
  // sum_{s<=N} c^t[s] = sum_i c^h[i] * prefix(c^(t-h))[N-i]
  const int h = t / 2;
  if (h == 0) return prefix_sums(c, N)[static_cast<std::size_t>(N)];
  Seq low = convolution_power(c, h, N);
  Seq high = t - h == h ? low : convolution_power(c, t - h, N);
  Seq pre = prefix_sums(high, N);
  std::vector<FactoredRF> parts;
  for (long i = 0; i <= N; ++i) {
    const FactoredRF& x = low[static_cast<std::size_t>(i)];
    const FactoredRF& y = pre[static_cast<std::size_t>(N - i)];
    if (x.is_zero() || y.is_zero()) continue;
    parts.push_back(x * y);
  }
  return sum(parts);
}

FactoredRF simplex_sum_factored(const SumSpec& spec) {
  return simplex_sum(family_terms(spec.family, spec.N), spec.t, spec.N);
}

RationalFunction simplex_sum(const SumSpec& spec) {
  return simplex_sum_factored(spec).to_rational_function();
}

Verdict power_identity_check(const TermFamily& f, int t) {
  Verdict v = make_verdict("power-identity", {{"family", f.name()}, {"t", std::to_string(t)}});
  try {
    f.validate();
  } catch (const std::invalid_argument& e) {
    reject_with(v, e.what());
    return v;
  }
  const long n = f.n, m = f.m();
  if (t * m > n - 1) {
    fail_with(v, {"hypothesis", {}, {}, {}, {}, {}, "t(n-1)/d exceeds n-1"});
    return v;
  }
  std::vector<FactoredRF> c = family_terms(f, n - 1);
  for (long k = m + 1; k < n; ++k) {
    if (!c[static_cast<std::size_t>(k)].is_zero()) {
      fail_with(v, {"hypothesis", {}, {}, {}, {}, {}, "term " + std::to_string(k) + " is not zero"});
      return v;
    }
  }
  FactoredRF lhs = simplex_sum(c, t, n - 1);
  FactoredRF rhs = sum(std::vector<FactoredRF>(c.begin(), c.begin() + m + 1)).pow(t);
  FactoredRF diff = lhs - rhs;
  if (!diff.is_zero()) {
    RationalFunction d = diff.to_rational_function();
    fail_with(v, {"not_equal", {}, {}, d.num().max_exponent(), {}, {},
                  "difference has numerator span " + std::to_string(d.num().span())});
  }
  return v;
}

Verdict block_factorization_check(const std::vector<Rational>& c, long n, int t, long L) {
  Verdict v = make_verdict("block-factorization",
                           {{"n", std::to_string(n)}, {"t", std::to_string(t)}, {"L", std::to_string(L)}});
  if (n < 1 || t < 1 || L < 0 || static_cast<long>(c.size()) < (L + 1) * n) {
    reject_with(v, "sequence must cover indices 0..(L+1)n-1");
    return v;
  }
  auto at = [&](long i) -> const Rational& { return c[static_cast<std::size_t>(i)]; };
  auto hypothesis = [&](const std::string& why) {
    fail_with(v, {"hypothesis", {}, {}, {}, {}, {}, why});
    return v;
  };
  if (at(0) != 1) return hypothesis("c(0) != 1");
  for (long l = 0; l <= L; ++l) {
    if (at(l * n) == 0) return hypothesis("c(" + std::to_string(l * n) + ") = 0");
    for (long k = 0; k < n; ++k)
      if (at(l * n + k) != at(l * n) * at(k))
        return hypothesis("c(" + std::to_string(l * n + k) + ") != c(" + std::to_string(l * n) + ") c(" +
                          std::to_string(k) + ")");
  }
  for (long k = 1; k < n; ++k)
    if (t * k > n - 1 && at(k) != 0) return hypothesis("c(" + std::to_string(k) + ") != 0 above (n-1)/t");

  std::vector<Rational> blocks(static_cast<std::size_t>(L) + 1);
  for (long l = 0; l <= L; ++l) blocks[static_cast<std::size_t>(l)] = at(l * n);
  for (long l = 0; l <= L; ++l) {
    const Rational block = composition_sum(blocks, t, l);
    for (long k = 0; k < n; ++k) {
      Rational lhs = composition_sum(c, t, l * n + k);
      Rational rhs = composition_sum(c, t, k) * block;
      if (lhs != rhs) {
        fail_with(v, {"not_equal", {}, {}, {}, {}, {},
                      "l=" + std::to_string(l) + " k=" + std::to_string(k) + ": " + lhs.get_str() +
                          " vs " + rhs.get_str()});
        return v;
      }
    }
  }
  return v;
}

}  // namespace qck
