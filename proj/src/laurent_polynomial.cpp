#include "qck/laurent_polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qck {

namespace {

void merge_sorted(std::vector<LaurentPolynomial::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<LaurentPolynomial::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  terms = std::move(out);
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(const Rational& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

LaurentPolynomial::LaurentPolynomial(long c) : LaurentPolynomial(Rational(c)) {}

LaurentPolynomial LaurentPolynomial::monomial(const Rational& c, long exponent) {
  LaurentPolynomial p;
  if (c != 0) p.terms_.emplace_back(exponent, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(std::vector<Term> terms) {
  LaurentPolynomial p;
  merge_sorted(terms);
  p.terms_ = std::move(terms);
  return p;
}

LaurentPolynomial LaurentPolynomial::from_dense(const std::vector<Rational>& coeffs, long low) {
  LaurentPolynomial p;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) p.terms_.emplace_back(low + static_cast<long>(i), coeffs[i]);
  return p;
}

Rational LaurentPolynomial::coefficient(long exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, long e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

LaurentPolynomial LaurentPolynomial::shifted(long k) const {
  LaurentPolynomial p = *this;
  for (auto& t : p.terms_) t.first += k;
  return p;
}

LaurentPolynomial LaurentPolynomial::monic() const {
  if (is_zero()) return {};
  LaurentPolynomial p = shifted(-min_exponent());
  Rational inv = 1 / leading_coefficient();
  return p *= inv;
}

Rational LaurentPolynomial::evaluate(const Rational& x) const {
  if (is_zero()) return 0;
  if (x == 0) {
    if (min_exponent() < 0) throw std::domain_error("evaluation at 0 of a negative power of q");
    return coefficient(0);
  }
  // Horner over the shifted polynomial, then multiply by x^min.
  Rational acc = 0;
  long prev = max_exponent();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (long e = prev; e > it->first; --e) acc *= x;
    acc += it->second;
    prev = it->first;
  }
  long low = min_exponent();
  Rational scale = 1;
  Rational base = low < 0 ? Rational(1 / x) : x;
  for (long i = 0; i < (low < 0 ? -low : low); ++i) scale *= base;
  return acc * scale;
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  if (other.is_zero()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Rational s = a->second + b->second;
      if (s != 0) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  return *this += -other;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  *this = *this * other;
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto dense = [](const LaurentPolynomial& p) {
    return 2 * p.term_count() > static_cast<std::size_t>(p.span() + 1);
  };
  // Dense operands go through the integer kernel (Kronecker substitution for
  // large inputs); sparse ones multiply term by term.
  if (a.term_count() * b.term_count() > 256 && dense(a) && dense(b)) {
    ScaledIntPoly x = to_scaled_int_poly(a);
    ScaledIntPoly y = to_scaled_int_poly(b);
    return from_int_poly(x.poly * y.poly, x.scale * y.scale, x.shift + y.shift);
  }
  std::vector<LaurentPolynomial::Term> prods;
  prods.reserve(a.term_count() * b.term_count());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) prods.emplace_back(ea + eb, ca * cb);
  return LaurentPolynomial::from_terms(std::move(prods));
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].first != b.terms_[i].first || a.terms_[i].second != b.terms_[i].second)
      return false;
  return true;
}

LaurentPolynomial pow(const LaurentPolynomial& base, unsigned long exponent) {
  LaurentPolynomial result(1);
  LaurentPolynomial b = base;
  while (exponent) {
    if (exponent & 1UL) result *= b;
    exponent >>= 1;
    if (exponent) b = b * b;
  }
  return result;
}

ScaledIntPoly to_scaled_int_poly(const LaurentPolynomial& p) {
  ScaledIntPoly out;
  if (p.is_zero()) {
    out.scale = 0;
    return out;
  }
  Integer den_lcm = 1;
  for (const auto& t : p.terms())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.second.get_den_mpz_t());
  const long low = p.min_exponent();
  std::vector<Integer> c(static_cast<std::size_t>(p.span() + 1));
  for (const auto& [e, v] : p.terms()) {
    Integer x = v.get_num() * (den_lcm / v.get_den());
    c[static_cast<std::size_t>(e - low)] = std::move(x);
  }
  detail::IntPoly poly(std::move(c));
  Integer g = poly.content();
  if (poly.leading() < 0) g = -g;
  poly.divide_exact_by(abs(g));
  if (g < 0) poly.negate();
  out.scale = Rational(g, den_lcm);
  out.scale.canonicalize();
  out.shift = low;
  out.poly = std::move(poly);
  return out;
}

LaurentPolynomial from_int_poly(const detail::IntPoly& poly, const Rational& scale, long shift) {
  std::vector<LaurentPolynomial::Term> terms;
  if (scale == 0) return {};
  terms.reserve(poly.nonzero_count());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (poly[i] == 0) continue;
    terms.emplace_back(shift + static_cast<long>(i), Rational(poly[i]) * scale);
  }
  return LaurentPolynomial::from_terms(std::move(terms));
}

namespace {

std::vector<Rational> dense_coefficients(const LaurentPolynomial& p) {
  std::vector<Rational> c(static_cast<std::size_t>(p.span() + 1));
  for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e - p.min_exponent())] = v;
  return c;
}

}  // namespace

DivRem divrem(const LaurentPolynomial& dividend, const LaurentPolynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (dividend.is_zero()) return {};
  const long a_low = dividend.min_exponent();
  const long b_low = divisor.min_exponent();
  std::vector<Rational> r = dense_coefficients(dividend);
  std::vector<std::pair<std::size_t, Rational>> rest;
  const std::size_t m = static_cast<std::size_t>(divisor.span());
  for (const auto& [e, c] : divisor.terms())
    if (static_cast<std::size_t>(e - b_low) < m) rest.emplace_back(static_cast<std::size_t>(e - b_low), c);
  const Rational lc_inv = 1 / divisor.leading_coefficient();
  std::vector<Rational> quot(r.size() > m ? r.size() - m : 0);
  Rational qk;
  for (std::size_t k = r.size(); k-- > m;) {
    if (r[k] == 0) continue;
    qk = r[k] * lc_inv;
    for (const auto& [j, c] : rest) r[k - m + j] -= qk * c;
    quot[k - m] = qk;
    r[k] = 0;
  }
  r.resize(std::min(r.size(), m));
  return {LaurentPolynomial::from_dense(quot, a_low - b_low), LaurentPolynomial::from_dense(r, a_low)};
}

bool divides(const LaurentPolynomial& divisor, const LaurentPolynomial& x) {
  if (divisor.is_zero()) return x.is_zero();
  ScaledIntPoly d = to_scaled_int_poly(divisor);
  ScaledIntPoly v = to_scaled_int_poly(x);
  if (v.poly.is_zero()) return true;
  return detail::divide_exact(v.poly, d.poly).has_value();
}

LaurentPolynomial gcd(const LaurentPolynomial& x, const LaurentPolynomial& y) {
  if (x.is_zero() && y.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  if (x.is_zero()) return y.monic();
  if (y.is_zero()) return x.monic();
  detail::IntPoly a = detail::gcd(to_scaled_int_poly(x).poly, to_scaled_int_poly(y).poly);
  return from_int_poly(a).monic();
}

ExtendedGcd ext_gcd(const LaurentPolynomial& x, const LaurentPolynomial& y) {
  if (x.is_zero() && y.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  const long x_low = x.min_exponent();
  const long y_low = y.min_exponent();
  LaurentPolynomial r0 = x.shifted(-x_low), r1 = y.shifted(-y_low);
  LaurentPolynomial s0(1), s1, t0, t1(1);
  while (!r1.is_zero()) {
    DivRem qr = divrem(r0, r1);
    LaurentPolynomial s2 = s0 - qr.quotient * s1;
    LaurentPolynomial t2 = t0 - qr.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 may carry a power of q from the shifted division; strip it into u, v.
  const long g_low = r0.min_exponent();
  const Rational inv = 1 / r0.leading_coefficient();
  ExtendedGcd out;
  out.g = r0.shifted(-g_low) * inv;
  out.u = s0.shifted(-x_low - g_low) * inv;
  out.v = t0.shifted(-y_low - g_low) * inv;
  return out;
}

}  // namespace qck
