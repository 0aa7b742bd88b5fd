#include "qck/cyclotomic.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace qck {

namespace {

std::shared_mutex memo_mutex;
std::unordered_map<long, std::shared_ptr<const detail::IntPoly>> memo;

}  // namespace

std::shared_ptr<const detail::IntPoly> cyclotomic_int(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic index must be positive");
  {
    std::shared_lock lock(memo_mutex);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
  }
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
  c[0] = -1;
  c[static_cast<std::size_t>(n)] = 1;
  detail::IntPoly p(std::move(c));
  for (long d : divisors(n)) {
    if (d == n) break;
    auto q = detail::divide_exact(p, *cyclotomic_int(d));
    if (!q) throw std::logic_error("cyclotomic division failed");
    p = std::move(*q);
  }
  auto value = std::make_shared<const detail::IntPoly>(std::move(p));
  std::unique_lock lock(memo_mutex);
  return memo.emplace(n, std::move(value)).first->second;
}

LaurentPolynomial cyclotomic(long n) { return from_int_poly(*cyclotomic_int(n)); }

LaurentPolynomial q_integer(long n) {
  if (n < 0) throw std::invalid_argument("q-integer of a negative number");
  return LaurentPolynomial::from_dense(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
}

std::string FactoredModulus::describe() const {
  std::string s = "[" + std::to_string(n) + "]";
  if (e > 0) s += "*Phi_" + std::to_string(n) + (e > 1 ? "^" + std::to_string(e) : "");
  return s;
}

FactoredModulus build_modulus(long n, int e) {
  if (n < 1) throw std::invalid_argument("modulus index must be positive");
  if (e < 0) throw std::invalid_argument("modulus exponent must be nonnegative");
  FactoredModulus m;
  m.n = n;
  m.e = e;
  m.factors.emplace_back(q_integer(n), 1);
  m.factors.emplace_back(cyclotomic(n), e);
  m.expanded = q_integer(n) * pow(cyclotomic(n), static_cast<unsigned long>(e));
  LaurentPolynomial check(1);
  for (const auto& [f, mult] : m.factors)
    for (int i = 0; i < mult; ++i) check *= f;
  if (!(check == m.expanded)) throw std::logic_error("modulus expansion mismatch");
  return m;
}

void check_pairwise_coprime(FactoredModulus& m) {
  bool ok = true;
  for (std::size_t i = 0; i < m.factors.size() && ok; ++i)
    for (std::size_t j = i + 1; j < m.factors.size() && ok; ++j) {
      if (m.factors[i].second == 0 || m.factors[j].second == 0) continue;
      ok = gcd(m.factors[i].first, m.factors[j].first).is_constant();
    }
  m.pairwise_coprime = ok;
}

bool lcm_identity_check(long n, int power) {
  if (n < 2 || power < 1) throw std::invalid_argument("lcm identity needs n >= 2 and power >= 1");
  LaurentPolynomial a = pow(cyclotomic(n), static_cast<unsigned long>(power));
  LaurentPolynomial b = q_integer(n);
  LaurentPolynomial lcm = divrem(a * b, gcd(a, b)).quotient.monic();
  LaurentPolynomial expected = (b * pow(cyclotomic(n), static_cast<unsigned long>(power - 1))).monic();
  return lcm == expected;
}

}  // namespace qck
