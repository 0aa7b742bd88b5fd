#include "qck/rational.hpp"

#include <stdexcept>
#include <vector>

namespace qck {

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto valid_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (num.size() > 1 && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  Integer n(num, 10), d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

namespace {

bool is_perfect_power(const Integer& x, unsigned long p) {
  if (x == 0 || x == 1) return true;
  if (x < 0) {
    if (p % 2 == 0) return false;
    Integer neg = -x;
    return is_perfect_power(neg, p);
  }
  Integer root;
  return mpz_root(root.get_mpz_t(), x.get_mpz_t(), p) != 0;
}

}  // namespace

bool is_perfect_power(const Rational& x, unsigned long p) {
  if (p == 1) return true;
  return is_perfect_power(x.get_num(), p) && is_perfect_power(x.get_den(), p);
}

std::vector<long> prime_divisors(long n) {
  if (n < 0) n = -n;
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<long> divisors(long n) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

long euler_phi(long n) {
  long result = n;
  for (long p : prime_divisors(n)) result -= result / p;
  return result;
}

}  // namespace qck
