#include "qck/factored.hpp"

#include "qck/cyclotomic.hpp"

#include <cstdlib>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace qck {

namespace {

std::shared_mutex binomial_mutex;
std::map<Atom, std::shared_ptr<const detail::IntPoly>> binomial_memo;

int sign(const Integer& x) { return mpz_sgn(x.get_mpz_t()); }

// atom divides q^period - fold
void filter_data(const Atom& atom, std::size_t& period, Rational& fold) {
  period = static_cast<std::size_t>(atom.m);
  fold = atom.is_cyclotomic() ? Rational(1) : Rational(1 / atom.beta);
}

bool divides_once(detail::IntPoly& numer, const Atom& atom, const detail::IntPoly& poly) {
  if (numer.degree() < poly.degree()) return false;
  std::size_t period;
  Rational fold;
  filter_data(atom, period, fold);
  auto res = detail::residues(numer);
  if (!detail::maybe_divisible(res, poly, period, fold)) return false;
  auto quot = detail::divide_exact(numer, poly);
  if (!quot) return false;
  numer = std::move(*quot);
  return true;
}

detail::IntPoly expand_atoms(const detail::IntPoly* numer, const std::map<Atom, long>& atoms,
                             bool positive) {
  std::vector<detail::IntPoly> factors;
  if (numer && !numer->is_one()) factors.push_back(*numer);
  for (const auto& [atom, e] : atoms) {
    if ((e > 0) != positive || e == 0) continue;
    long k = e > 0 ? e : -e;
    factors.push_back(detail::pow(*atom_poly(atom), static_cast<unsigned long>(k)));
  }
  return detail::product(std::move(factors));
}

}  // namespace

std::string Atom::to_string() const {
  if (is_cyclotomic()) return "Phi_" + std::to_string(m);
  return "(1 - " + beta.get_str() + "*q^" + std::to_string(m) + ")";
}

std::shared_ptr<const detail::IntPoly> atom_poly(const Atom& atom) {
  if (atom.is_cyclotomic()) return cyclotomic_int(atom.m);
  {
    std::shared_lock lock(binomial_mutex);
    auto it = binomial_memo.find(atom);
    if (it != binomial_memo.end()) return it->second;
  }
  std::vector<Integer> c(static_cast<std::size_t>(atom.m) + 1);
  const Integer& u = atom.beta.get_num();
  const Integer& v = atom.beta.get_den();
  c.back() = abs(u);
  c.front() = sign(u) > 0 ? Integer(-v) : v;
  auto p = std::make_shared<const detail::IntPoly>(std::move(c));
  std::unique_lock lock(binomial_mutex);
  return binomial_memo.emplace(atom, std::move(p)).first->second;
}

FactoredRF FactoredRF::constant(const Rational& c) {
  FactoredRF r;
  if (c == 0) return r;
  r.scalar_ = c;
  r.numer_ = detail::IntPoly::constant(1);
  return r;
}

FactoredRF FactoredRF::q_power(long exponent, const Rational& c) {
  FactoredRF r = constant(c);
  if (!r.is_zero()) r.qexp_ = exponent;
  return r;
}

FactoredRF FactoredRF::one_minus(const Rational& beta, long m) {
  if (beta == 0) return one();
  if (m == 0) return constant(1 - beta);
  if (m < 0) return q_power(m, -beta) * one_minus(1 / beta, -m);
  FactoredRF r = one();
  if (beta == 1 || beta == -1) {
    // 1 - q^m = -prod_{e | m} Phi_e; 1 + q^m = prod_{e | 2m, e does not divide m} Phi_e
    if (beta == 1) {
      r.scalar_ = -1;
      for (long e : divisors(m)) r.atoms_[Atom{e, 0}] = 1;
    } else {
      for (long e : divisors(2 * m))
        if (m % e != 0) r.atoms_[Atom{e, 0}] = 1;
    }
    return r;
  }
  for (long p : prime_divisors(m))
    if (is_perfect_power(beta, static_cast<unsigned long>(p)))
      throw std::domain_error("reducible binomial factor 1 - " + beta.get_str() + "*q^" +
                              std::to_string(m));
  if (m % 4 == 0 && is_perfect_power(Rational(-1 / (4 * beta)), 4))
    throw std::domain_error("reducible binomial factor 1 - " + beta.get_str() + "*q^" +
                            std::to_string(m));
  // 1 - (u/v) q^m = (-sgn(u)/v) (|u| q^m - sgn(u) v)
  r.scalar_ = Rational(sign(beta.get_num()) > 0 ? -1 : 1, 1) / Rational(beta.get_den());
  r.atoms_[Atom{m, beta}] = 1;
  return r;
}

FactoredRF FactoredRF::q_integer(long n) {
  if (n < 0) throw std::invalid_argument("q-integer of a negative number");
  if (n == 0) return {};
  FactoredRF r = one();
  for (long e : divisors(n))
    if (e > 1) r.atoms_[Atom{e, 0}] = 1;
  return r;
}

FactoredRF FactoredRF::from_polynomial(const LaurentPolynomial& p) {
  FactoredRF r;
  if (p.is_zero()) return r;
  ScaledIntPoly s = to_scaled_int_poly(p);
  r.scalar_ = s.scale;
  r.qexp_ = s.shift;
  r.numer_ = std::move(s.poly);
  return r;
}

void FactoredRF::normalize_numer() {
  if (numer_.is_zero()) {
    *this = FactoredRF();
    return;
  }
  std::size_t low = numer_.low_order();
  if (low) {
    numer_ = numer_.shifted_down(low);
    qexp_ += static_cast<long>(low);
  }
  Integer g = numer_.content();
  if (numer_.leading() < 0) g = -g;
  if (g != 1) {
    numer_.divide_exact_by(abs(g));
    if (g < 0) numer_.negate();
    scalar_ *= g;
  }
}

void FactoredRF::reduce() {
  if (is_zero() || numer_.degree() <= 0) return;
  for (auto it = atoms_.begin(); it != atoms_.end();) {
    if (it->second < 0) {
      auto poly = atom_poly(it->first);
      while (it->second < 0 && divides_once(numer_, it->first, *poly)) ++it->second;
    }
    it = it->second == 0 ? atoms_.erase(it) : std::next(it);
    if (numer_.degree() <= 0) break;
  }
}

FactoredRF FactoredRF::inverse() const {
  if (is_zero()) throw std::domain_error("parameter pole");
  if (!numer_.is_one()) throw std::logic_error("inverse of a value with an expanded numerator");
  FactoredRF r = *this;
  r.scalar_ = 1 / scalar_;
  r.qexp_ = -qexp_;
  for (auto& [atom, e] : r.atoms_) e = -e;
  return r;
}

FactoredRF FactoredRF::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  if (exponent == 0) return one();
  if (is_zero()) return {};
  FactoredRF r = *this;
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), scalar_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), scalar_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  r.scalar_ = Rational(num, den);
  r.qexp_ = qexp_ * exponent;
  r.numer_ = detail::pow(numer_, static_cast<unsigned long>(exponent));
  for (auto& [atom, e] : r.atoms_) e *= exponent;
  return r;
}

FactoredRF FactoredRF::operator-() const {
  FactoredRF r = *this;
  r.scalar_ = -scalar_;
  return r;
}

FactoredRF operator*(const FactoredRF& x, const FactoredRF& y) {
  if (x.is_zero() || y.is_zero()) return {};
  FactoredRF r;
  r.scalar_ = x.scalar_ * y.scalar_;
  r.qexp_ = x.qexp_ + y.qexp_;
  r.numer_ = x.numer_ * y.numer_;
  r.atoms_ = x.atoms_;
  for (const auto& [atom, e] : y.atoms_) {
    long& slot = r.atoms_[atom];
    slot += e;
    if (slot == 0) r.atoms_.erase(atom);
  }
  // A numerator on one side may cancel denominator atoms from the other.
  if (!(x.numer_.is_one() && y.numer_.is_one())) r.reduce();
  return r;
}

FactoredRF operator+(const FactoredRF& x, const FactoredRF& y) { return sum({x, y}); }

FactoredRF sum(const std::vector<FactoredRF>& terms) {
  std::vector<const FactoredRF*> live;
  for (const auto& t : terms)
    if (!t.is_zero()) live.push_back(&t);
  if (live.empty()) return {};
  if (live.size() == 1) return *live.front();

  // Common part: every atom at its smallest exponent across the terms.
  std::map<Atom, long> common;
  for (const auto* t : live)
    for (const auto& [atom, e] : t->atoms_) common.try_emplace(atom, 0);
  for (auto& [atom, e] : common) {
    long lo = 0;
    bool first = true;
    for (const auto* t : live) {
      auto it = t->atoms_.find(atom);
      long v = it == t->atoms_.end() ? 0 : it->second;
      lo = first ? v : std::min(lo, v);
      first = false;
    }
    e = lo;
  }
  long qmin = live.front()->qexp_;
  Integer den_lcm = 1;
  for (const auto* t : live) {
    qmin = std::min(qmin, t->qexp_);
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t->scalar_.get_den_mpz_t());
  }

  std::vector<Integer> acc;
  for (const auto* t : live) {
    std::map<Atom, long> extra;
    for (const auto& [atom, lo] : common) {
      auto it = t->atoms_.find(atom);
      long v = it == t->atoms_.end() ? 0 : it->second;
      if (v > lo) extra.emplace(atom, v - lo);
    }
    detail::IntPoly cof = expand_atoms(&t->numer_, extra, true);
    Integer mult = t->scalar_.get_num() * (den_lcm / t->scalar_.get_den());
    detail::add_scaled(acc, cof, mult, static_cast<std::size_t>(t->qexp_ - qmin));
  }

  FactoredRF r;
  r.numer_ = detail::IntPoly(std::move(acc));
  if (r.numer_.is_zero()) return r;
  r.scalar_ = Rational(Integer(1), den_lcm);
  r.qexp_ = qmin;
  for (const auto& [atom, e] : common)
    if (e != 0) r.atoms_.emplace(atom, e);
  r.normalize_numer();
  r.reduce();
  return r;
}

long FactoredRF::valuation(const Atom& atom) const {
  if (is_zero()) throw std::domain_error("valuation of zero");
  auto it = atoms_.find(atom);
  long v = it == atoms_.end() ? 0 : it->second;
  if (v < 0) return v;
  detail::IntPoly n = numer_;
  auto poly = atom_poly(atom);
  while (divides_once(n, atom, *poly)) ++v;
  return v;
}

Rational FactoredRF::evaluate(const Rational& x) const {
  if (is_zero()) return 0;
  if (x == 0 && (qexp_ < 0)) throw std::domain_error("evaluation at a pole");
  Rational v = scalar_ * numer_.evaluate(x);
  if (qexp_ != 0) {
    Rational base = qexp_ > 0 ? x : Rational(1 / x);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(std::abs(qexp_)));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(std::abs(qexp_)));
    v *= Rational(num, den);
  }
  for (const auto& [atom, e] : atoms_) {
    Rational a = atom_poly(atom)->evaluate(x);
    if (a == 0) {
      if (e < 0) throw std::domain_error("evaluation at a pole");
      return 0;
    }
    if (e < 0) a = 1 / a;
    for (long i = 0; i < std::abs(e); ++i) v *= a;
  }
  return v;
}

LaurentPolynomial FactoredRF::expanded_numerator() const {
  if (is_zero()) return {};
  return from_int_poly(expand_atoms(&numer_, atoms_, true), scalar_, qexp_);
}

LaurentPolynomial FactoredRF::expanded_denominator() const {
  if (is_zero()) return LaurentPolynomial(1);
  return from_int_poly(expand_atoms(nullptr, atoms_, false));
}

RationalFunction FactoredRF::to_rational_function() const {
  if (is_zero()) return {};
  detail::IntPoly den = expand_atoms(nullptr, atoms_, false);
  Rational inv = 1 / Rational(den.leading());
  return RationalFunction::from_canonical(
      from_int_poly(expand_atoms(&numer_, atoms_, true), scalar_ * inv, qexp_),
      from_int_poly(den, inv));
}

}  // namespace qck
