#include "qck/int_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <bit>

namespace qck::detail {

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t exponent) {
  std::vector<Integer> v(exponent + 1);
  v[exponent] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t IntPoly::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(c_.begin(), c_.end(), [](const Integer& x) { return x != 0; }));
}

std::size_t IntPoly::low_order() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return i;
  return 0;
}

IntPoly IntPoly::shifted_down(std::size_t k) const {
  if (k >= c_.size()) return {};
  return IntPoly(std::vector<Integer>(c_.begin() + static_cast<long>(k), c_.end()));
}

IntPoly IntPoly::shifted_up(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Integer> v(k + c_.size());
  std::copy(c_.begin(), c_.end(), v.begin() + static_cast<long>(k));
  IntPoly r;
  r.c_ = std::move(v);
  return r;
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& x : c_) {
    if (x == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void IntPoly::divide_exact_by(const Integer& d) {
  if (d == 1) return;
  for (auto& x : c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
}

void IntPoly::negate() {
  for (auto& x : c_) x = -x;
}

Integer IntPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPoly::evaluate(const Rational& x) const {
  // Horner on sum c_i num^i den^(n-1-i), divided by den^(n-1) once at the end.
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer acc = 0, den_pow = 1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * num + *it * den_pow;
    den_pow *= den;
  }
  if (c_.empty()) return 0;
  Integer scale = 1;
  mpz_pow_ui(scale.get_mpz_t(), den.get_mpz_t(), c_.size() - 1);
  Rational r(acc, scale);
  r.canonicalize();
  return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> v(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) v[i] += b[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> v(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) v[i] -= b[i];
  return IntPoly(std::move(v));
}

namespace {

constexpr std::size_t kLimbBits = sizeof(mp_limb_t) * 8;

std::size_t max_bits(const IntPoly& p) {
  std::size_t m = 1;
  for (const auto& x : p.coeffs())
    if (x != 0) m = std::max(m, mpz_sizeinbase(x.get_mpz_t(), 2));
  return m;
}

// Evaluates p at 2^(kLimbBits * slot_limbs) as one big integer.
Integer pack(const IntPoly& p, std::size_t slot_limbs) {
  const std::size_t total = p.size() * slot_limbs;
  std::vector<mp_limb_t> pos(total, 0), neg;
  for (std::size_t i = 0; i < p.size(); ++i) {
    int s = mpz_sgn(p[i].get_mpz_t());
    if (s == 0) continue;
    if (s < 0 && neg.empty()) neg.assign(total, 0);
    auto& buf = s > 0 ? pos : neg;
    if (mpz_sizeinbase(p[i].get_mpz_t(), 2) > slot_limbs * kLimbBits)
      throw std::logic_error("coefficient wider than its slot");
    std::size_t count = 0;
    mpz_export(buf.data() + i * slot_limbs, &count, -1, sizeof(mp_limb_t), 0, 0,
               p[i].get_mpz_t());
  }
  Integer result;
  mpz_import(result.get_mpz_t(), total, -1, sizeof(mp_limb_t), 0, 0, pos.data());
  if (!neg.empty()) {
    Integer n;
    mpz_import(n.get_mpz_t(), total, -1, sizeof(mp_limb_t), 0, 0, neg.data());
    result -= n;
  }
  return result;
}

// Inverse of pack for a product whose coefficients satisfy |c| < 2^(bits-1).
IntPoly unpack(const Integer& value, std::size_t n, std::size_t slot_limbs) {
  const bool negative = value < 0;
  Integer mag = abs(value);
  std::vector<mp_limb_t> buf(n * slot_limbs + 2, 0);
  std::size_t count = 0;
  mpz_export(buf.data(), &count, -1, sizeof(mp_limb_t), 0, 0, mag.get_mpz_t());
  Integer base = 1, half;
  base <<= static_cast<mp_bitcnt_t>(slot_limbs * kLimbBits);
  half = base >> 1;
  std::vector<Integer> out(n);
  int carry = 0;
  Integer digit;
  for (std::size_t k = 0; k < n; ++k) {
    mpz_import(digit.get_mpz_t(), slot_limbs, -1, sizeof(mp_limb_t), 0, 0,
               buf.data() + k * slot_limbs);
    if (carry) digit += 1;
    if (digit >= half) {
      digit -= base;
      carry = 1;
    } else {
      carry = 0;
    }
    out[k] = negative ? Integer(-digit) : digit;
  }
  return IntPoly(std::move(out));
}

IntPoly kronecker_mul(const IntPoly& a, const IntPoly& b) {
  const std::size_t shorter = std::min(a.size(), b.size());
  const std::size_t bits =
      max_bits(a) + max_bits(b) + static_cast<std::size_t>(std::bit_width(shorter)) + 2;
  const std::size_t slot = (bits + kLimbBits - 1) / kLimbBits;
  Integer pa = pack(a, slot);
  Integer pb = pack(b, slot);
  Integer prod = pa * pb;
  return unpack(prod, a.size() + b.size() - 1, slot);
}

IntPoly schoolbook_mul(const IntPoly& a, const IntPoly& b) {
  std::vector<std::pair<std::size_t, const Integer*>> nb;
  for (std::size_t j = 0; j < b.size(); ++j)
    if (b[j] != 0) nb.emplace_back(j, &b[j]);
  std::vector<Integer> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (const auto& [j, bj] : nb)
      mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), bj->get_mpz_t());
  }
  return IntPoly(std::move(c));
}

}  // namespace

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  const std::size_t work = a.nonzero_count() * b.nonzero_count();
  if (work <= 1024 || std::min(a.size(), b.size()) < 8) return schoolbook_mul(a, b);
  return kronecker_mul(a, b);
}

IntPoly pow(const IntPoly& base, unsigned long exponent) {
  IntPoly result = IntPoly::constant(1);
  IntPoly b = base;
  while (exponent) {
    if (exponent & 1UL) result = result * b;
    exponent >>= 1;
    if (exponent) b = b * b;
  }
  return result;
}

IntPoly product(std::vector<IntPoly> factors) {
  if (factors.empty()) return IntPoly::constant(1);
  while (factors.size() > 1) {
    std::sort(factors.begin(), factors.end(),
              [](const IntPoly& x, const IntPoly& y) { return x.size() < y.size(); });
    std::vector<IntPoly> next;
    next.reserve((factors.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < factors.size(); i += 2)
      next.push_back(factors[i] * factors[i + 1]);
    if (factors.size() % 2) next.push_back(std::move(factors.back()));
    factors = std::move(next);
  }
  return std::move(factors.front());
}

void add_scaled(std::vector<Integer>& acc, const IntPoly& x, const Integer& scale,
                std::size_t shift) {
  if (x.is_zero() || scale == 0) return;
  if (acc.size() < shift + x.size()) acc.resize(shift + x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    mpz_addmul(acc[shift + i].get_mpz_t(), x[i].get_mpz_t(), scale.get_mpz_t());
  }
}

std::optional<IntPoly> divide_exact(const IntPoly& dividend, const IntPoly& divisor) {
  if (divisor.is_zero()) return std::nullopt;
  if (dividend.is_zero()) return IntPoly{};
  if (dividend.degree() < divisor.degree()) return std::nullopt;
  const std::size_t m = static_cast<std::size_t>(divisor.degree());
  const Integer& lc = divisor.leading();
  std::vector<std::pair<std::size_t, const Integer*>> rest;
  for (std::size_t j = 0; j < m; ++j)
    if (divisor[j] != 0) rest.emplace_back(j, &divisor[j]);
  // The constant-term test is cheap and rejects most non-divisors early.
  if (divisor[0] != 0 && !mpz_divisible_p(dividend[0].get_mpz_t(), divisor[0].get_mpz_t()))
    return std::nullopt;

  std::vector<Integer> r = dividend.coeffs();
  std::vector<Integer> quot(r.size() - m);
  Integer qk;
  for (std::size_t k = r.size(); k-- > m;) {
    if (r[k] == 0) continue;
    if (lc == 1) {
      qk = r[k];
    } else if (lc == -1) {
      qk = -r[k];
    } else {
      if (!mpz_divisible_p(r[k].get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
      mpz_divexact(qk.get_mpz_t(), r[k].get_mpz_t(), lc.get_mpz_t());
    }
    for (const auto& [j, c] : rest) mpz_submul(r[k - m + j].get_mpz_t(), qk.get_mpz_t(), c->get_mpz_t());
    quot[k - m] = qk;
    r[k] = 0;
  }
  for (std::size_t j = 0; j < m; ++j)
    if (r[j] != 0) return std::nullopt;
  return IntPoly(std::move(quot));
}

namespace {

IntPoly primitive_part(IntPoly p) {
  if (p.is_zero()) return p;
  Integer g = p.content();
  p.divide_exact_by(g);
  if (p.leading() < 0) p.negate();
  return p;
}

// Pseudo-remainder of a by b, made primitive.
IntPoly primitive_prem(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> r = a.coeffs();
  const std::size_t m = static_cast<std::size_t>(b.degree());
  const Integer& lc = b.leading();
  Integer factor, g;
  for (std::size_t k = r.size(); k-- > m;) {
    if (r[k] == 0) continue;
    factor = r[k];
    if (lc != 1)
      for (std::size_t i = 0; i < k; ++i) r[i] *= lc;
    for (std::size_t j = 0; j < m; ++j)
      if (b[j] != 0) mpz_submul(r[k - m + j].get_mpz_t(), factor.get_mpz_t(), b[j].get_mpz_t());
    r[k] = 0;
    g = 0;
    for (std::size_t i = 0; i < k && g != 1; ++i)
      if (r[i] != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r[i].get_mpz_t());
    if (g > 1)
      for (std::size_t i = 0; i < k; ++i) mpz_divexact(r[i].get_mpz_t(), r[i].get_mpz_t(), g.get_mpz_t());
  }
  r.resize(std::min(r.size(), m));
  return primitive_part(IntPoly(std::move(r)));
}

IntPoly prs_gcd(IntPoly a, IntPoly b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = primitive_prem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Evaluate both at a power of two larger than twice either norm, take
// the integer gcd and read the polynomial back from balanced digits. A
// candidate that divides both inputs is the gcd.
std::optional<IntPoly> heuristic_gcd(const IntPoly& a, const IntPoly& b) {
  std::size_t bits = std::max(max_bits(a), max_bits(b)) + 8;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const std::size_t slot = (bits + kLimbBits - 1) / kLimbBits;
    Integer g;
    Integer pa = pack(a, slot), pb = pack(b, slot);
    mpz_gcd(g.get_mpz_t(), pa.get_mpz_t(), pb.get_mpz_t());
    const std::size_t n = mpz_sizeinbase(g.get_mpz_t(), 2) / (slot * kLimbBits) + 2;
    IntPoly h = primitive_part(unpack(g, n, slot));
    if (!h.is_zero() && divide_exact(a, h) && divide_exact(b, h)) return h;
    bits = bits * 2 + 16;
  }
  return std::nullopt;
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  IntPoly pa = primitive_part(a), pb = primitive_part(b);
  if (pa.degree() == 0 || pb.degree() == 0) return IntPoly::constant(1);
  if (auto h = heuristic_gcd(pa, pb)) return *h;
  return prs_gcd(std::move(pa), std::move(pb));
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(prod) & kFilterPrime;
  std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
  std::uint64_t r = lo + hi;
  if (r >= kFilterPrime) r -= kFilterPrime;
  return r;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t to_residue(const Integer& x) {
  return mpz_fdiv_ui(x.get_mpz_t(), kFilterPrime);
}

std::vector<std::uint64_t> residues(const IntPoly& p) {
  std::vector<std::uint64_t> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = to_residue(p[i]);
  return r;
}

bool maybe_divisible(std::span<const std::uint64_t> poly_residues, const IntPoly& divisor,
                     std::size_t period, const Rational& fold_constant) {
  const std::uint64_t lc = to_residue(divisor.leading());
  const std::uint64_t fden = to_residue(fold_constant.get_den());
  if (lc == 0 || fden == 0) return true;
  const std::uint64_t c = mulmod(to_residue(fold_constant.get_num()), powmod(fden, kFilterPrime - 2));

  // q^period = c modulo the divisor, so fold the residues down to degree < period.
  std::vector<std::uint64_t> g(period, 0);
  std::uint64_t block_scale = 1;
  for (std::size_t start = 0; start < poly_residues.size(); start += period) {
    const std::size_t end = std::min(start + period, poly_residues.size());
    for (std::size_t j = start; j < end; ++j) {
      std::uint64_t v = mulmod(poly_residues[j], block_scale);
      std::uint64_t& slot = g[j - start];
      slot += v;
      if (slot >= kFilterPrime) slot -= kFilterPrime;
    }
    block_scale = mulmod(block_scale, c);
  }

  const std::size_t m = static_cast<std::size_t>(divisor.degree());
  std::vector<std::uint64_t> d = residues(divisor);
  const std::uint64_t lc_inv = powmod(lc, kFilterPrime - 2);
  for (std::size_t k = g.size(); k-- > m;) {
    if (g[k] == 0) continue;
    const std::uint64_t qk = mulmod(g[k], lc_inv);
    for (std::size_t j = 0; j < m; ++j) {
      if (d[j] == 0) continue;
      std::uint64_t sub = mulmod(qk, d[j]);
      std::uint64_t& slot = g[k - m + j];
      slot = slot >= sub ? slot - sub : slot + kFilterPrime - sub;
    }
    g[k] = 0;
  }
  for (std::size_t j = 0; j < std::min(m, g.size()); ++j)
    if (g[j] != 0) return false;
  return true;
}

}  // namespace qck::detail
