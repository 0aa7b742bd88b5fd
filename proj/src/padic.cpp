#include "qck/padic.hpp"

#include <stdexcept>
#include <string>

namespace qck {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

Integer power_of(long p, int k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
  return r;
}

Integer mod_floor(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

void require_same(const PadicResidue& x, const PadicResidue& y) {
  if (x.p() != y.p() || x.k() != y.k()) throw std::invalid_argument("residues modulo different p^k");
}

}  // namespace

PadicResidue::PadicResidue(long p, int k, const Integer& value) : p_(p), k_(k) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (k < 1) throw std::invalid_argument("precision must be positive");
  modulus_ = power_of(p, k);
  value_ = mod_floor(value, modulus_);
}

PadicResidue PadicResidue::from_rational(long p, int k, const Rational& x) {
  PadicResidue num(p, k, x.get_num());
  PadicResidue den(p, k, x.get_den());
  return num * den.inverse();
}

PadicResidue PadicResidue::reduced(int k) const {
  if (k > k_) throw std::invalid_argument("cannot raise precision");
  return {p_, k, value_};
}

PadicResidue PadicResidue::inverse() const {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), value_.get_mpz_t(), modulus_.get_mpz_t()) == 0)
    throw std::domain_error("not a p-adic unit");
  return {p_, k_, r};
}

PadicResidue operator+(const PadicResidue& x, const PadicResidue& y) {
  require_same(x, y);
  return {x.p_, x.k_, x.value_ + y.value_};
}

PadicResidue operator-(const PadicResidue& x, const PadicResidue& y) {
  require_same(x, y);
  return {x.p_, x.k_, x.value_ - y.value_};
}

PadicResidue operator*(const PadicResidue& x, const PadicResidue& y) {
  require_same(x, y);
  return {x.p_, x.k_, x.value_ * y.value_};
}

PadicResidue PadicResidue::operator-() const { return {p_, k_, -value_}; }

PadicResidue padic_gamma(const Rational& x, long p, int k) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (mpz_divisible_ui_p(x.get_den().get_mpz_t(), static_cast<unsigned long>(p)))
    throw std::invalid_argument("p divides the denominator of the argument");
  const PadicResidue rep = PadicResidue::from_rational(p, k, x);
  if (!rep.modulus().fits_ulong_p()) throw std::invalid_argument("p^k too large");
  const unsigned long mod = rep.modulus().get_ui();
  const unsigned long m = rep.value().get_ui();
  unsigned long acc = 1;
  for (unsigned long j = 1; j < m; ++j) {
    if (j % static_cast<unsigned long>(p) == 0) continue;
    acc = static_cast<unsigned long>(static_cast<unsigned __int128>(acc) * j % mod);
  }
  PadicResidue g(p, k, Integer(acc));
  return m % 2 == 1 ? -g : g;
}

Rational pochhammer(const Rational& x, long k) {
  Rational r = 1;
  for (long i = 0; i < k; ++i) r *= x + i;
  return r;
}

namespace {

// sum_{k<=upper} (slope k + 1) (a)_k^4 / k!^4, by term ratios
Rational hypergeometric_sum(const Rational& a, long slope, long upper) {
  Rational sum = 0, ratio = 1;
  for (long k = 0; k <= upper; ++k) {
    if (k > 0) {
      Rational step = (a + (k - 1)) / k;
      ratio *= step * step * step * step;
    }
    sum += ratio * (slope * k + 1);
  }
  return sum;
}

Verdict residue_verdict(Verdict v, const PadicResidue& lhs, const PadicResidue& rhs) {
  if (!(lhs == rhs))
    fail_with(v, {"residue_mismatch", {}, {}, {}, {}, {},
                  "left " + lhs.value().get_str() + ", right " + rhs.value().get_str() + " mod " +
                      std::to_string(lhs.p()) + "^" + std::to_string(lhs.k())});
  return v;
}

std::vector<std::pair<std::string, std::string>> padic_params(long p, bool negate) {
  std::vector<std::pair<std::string, std::string>> params{{"p", std::to_string(p)}};
  if (negate) params.emplace_back("control", "rhs-negated");
  return params;
}

}  // namespace

Verdict verify_g2(long p, bool negate_rhs) {
  Verdict v = make_verdict("g2", padic_params(p, negate_rhs));
  if (!is_prime(p) || p % 4 != 1) {
    reject_with(v, "p must be a prime congruent to 1 mod 4");
    return v;
  }
  const int k = 3;
  v.modulus = ModulusSummary{p, k, 0, std::to_string(p) + "^" + std::to_string(k)};
  PadicResidue lhs = PadicResidue::from_rational(p, k, hypergeometric_sum(Rational(1, 4), 8, (p - 1) / 4));
  PadicResidue rhs = PadicResidue(p, k, Integer(p)) * padic_gamma(Rational(1, 4), p, k) *
                     padic_gamma(Rational(1, 2), p, k) * padic_gamma(Rational(3, 4), p, k).inverse();
  return residue_verdict(std::move(v), lhs, negate_rhs ? -rhs : rhs);
}

Verdict verify_he(long p, bool negate_rhs) {
  Verdict v = make_verdict("he", padic_params(p, negate_rhs));
  if (p < 5 || !is_prime(p) || p % 3 != 1) {
    reject_with(v, "p must be a prime >= 5 congruent to 1 mod 3");
    return v;
  }
  const int k = 4;
  v.modulus = ModulusSummary{p, k, 0, std::to_string(p) + "^" + std::to_string(k)};
  PadicResidue lhs = PadicResidue::from_rational(p, k, hypergeometric_sum(Rational(1, 3), 6, (p - 1) / 3));
  PadicResidue g = padic_gamma(Rational(1, 3), p, k);
  PadicResidue rhs = -(PadicResidue(p, k, Integer(p)) * g * g * g);
  return residue_verdict(std::move(v), lhs, negate_rhs ? -rhs : rhs);
}

Verdict padic_gamma_sanity(long p) {
  Verdict v = make_verdict("padic-gamma-sanity", {{"p", std::to_string(p)}});
  if (p < 3 || !is_prime(p)) {
    reject_with(v, "p must be an odd prime");
    return v;
  }
  auto fail = [&](const std::string& what) {
    fail_with(v, {"residue_mismatch", {}, {}, {}, {}, {}, what});
    return v;
  };
  const int k = 3;
  if (!(padic_gamma(1, p, k) == PadicResidue(p, k, Integer(-1)))) return fail("Gamma_p(1) != -1");
  for (long m = 2; m <= 3 * p; ++m) {
    PadicResidue factor(p, k, Integer(m % p == 0 ? -1 : -m));
    if (!(padic_gamma(m + 1, p, k) == factor * padic_gamma(m, p, k)))
      return fail("functional equation at m=" + std::to_string(m));
  }
  for (const Rational& x : {Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(3, 4), Rational(-2, 5),
                            Rational(7, 6)}) {
    if (mpz_divisible_ui_p(x.get_den().get_mpz_t(), static_cast<unsigned long>(p))) continue;
    if (!(padic_gamma(x, p, 3).reduced(2) == padic_gamma(x, p, 2)))
      return fail("precision coherence at x=" + x.get_str());
  }
  PadicResidue half = padic_gamma(Rational(1, 2), p, k);
  PadicResidue sign(p, k, Integer(((p + 1) / 2) % 2 == 0 ? 1 : -1));
  if (!(half * half == sign)) return fail("Gamma_p(1/2)^2 sign");
  return v;
}

}  // namespace qck
