#include "qck/qseries.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace qck {

Monomial Monomial::inverse() const {
  if (coeff == 0) throw std::domain_error("parameter pole");
  return {1 / coeff, -exp};
}

Monomial ParamValue::monomial() const {
  if (kind == Kind::q_power) return {1, exponent};
  return {value, 0};
}

std::string ParamValue::to_string() const {
  if (kind == Kind::rational) return value.get_str();
  if (exponent == 1) return "q";
  return "q^" + std::to_string(exponent);
}

ParamValue parse_param(std::string_view text, long d, long n) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty parameter value");
  if (text.front() != 'q') {
    Rational v = parse_rational(text);
    if (v == 0) throw std::invalid_argument("parameter values must be nonzero");
    return ParamValue::rational(v);
  }
  if (text == "q") return ParamValue::q_power(1);
  if (text.size() < 3 || text[1] != '^') throw std::invalid_argument("bad parameter value '" + std::string(text) + "'");
  std::string_view e = text.substr(2);
  if (e == "n") return ParamValue::q_power(n);
  if (e == "-n") return ParamValue::q_power(-n);
  if (e == "(d-1)" || e == "d-1") return ParamValue::q_power(d - 1);
  long v = 0;
  auto [ptr, ec] = std::from_chars(e.data(), e.data() + e.size(), v);
  if (ec != std::errc() || ptr != e.data() + e.size())
    throw std::invalid_argument("bad parameter value '" + std::string(text) + "'");
  return ParamValue::q_power(v);
}

namespace {

Monomial qm(long e) { return {1, e}; }

Rational rational_pow(const Rational& x, long k) {
  if (k < 0) {
    if (x == 0) throw std::domain_error("parameter pole");
    return rational_pow(1 / x, -k);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(k));
  return Rational(num, den);
}

// x^k for a monomial x and any integer k
FactoredRF power(const Monomial& x, long k) {
  return FactoredRF::q_power(x.exp * k, rational_pow(x.coeff, k));
}

FactoredRF one_minus(const Monomial& x) { return FactoredRF::one_minus(x.coeff, x.exp); }

// x - y as x (1 - y/x)
FactoredRF difference(const Monomial& x, const Monomial& y) {
  if (x.coeff == 0) return -power(y, 1);
  return power(x, 1) * one_minus(y * x.inverse());
}

FactoredRF poch(const Monomial& x, long d, long k) { return qpoch_factored(x, d, k); }

Monomial param(const std::optional<ParamValue>& p, const char* name) {
  if (!p) throw std::invalid_argument(std::string("missing parameter ") + name);
  return p->monomial();
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void require_admissible(long d, long n, long min_d) {
  require(d >= min_d, "d must be at least " + std::to_string(min_d));
  require(n >= 1, "n must be positive");
  require((n - 1) % d == 0, "n must be 1 mod d");
}

}  // namespace

std::string to_string(FamilyId id) {
  switch (id) {
    case FamilyId::thm1: return "thm1";
    case FamilyId::cor_d3: return "cor-d3";
    case FamilyId::g2_quad: return "thm5";
    case FamilyId::thm3: return "thm3";
    case FamilyId::lem5: return "lem5";
    case FamilyId::thm4: return "lem-thm4";
    case FamilyId::liu_wang: return "liu-wang";
    case FamilyId::bachraoui: return "bachraoui";
  }
  return "?";
}

TermFamily TermFamily::thm1(long d, long n) { return {FamilyId::thm1, d, n, {}, {}, {}, {}}; }
TermFamily TermFamily::cor_d3(long n) { return {FamilyId::cor_d3, 3, n, {}, {}, {}, {}}; }
TermFamily TermFamily::g2_quad(long n) { return {FamilyId::g2_quad, 4, n, {}, {}, {}, {}}; }
TermFamily TermFamily::thm3(long d, long n, ParamValue c) {
  return {FamilyId::thm3, d, n, {}, {}, c, {}};
}
TermFamily TermFamily::lem5(long d, long n, ParamValue a, ParamValue b) {
  return {FamilyId::lem5, d, n, a, b, {}, {}};
}
TermFamily TermFamily::thm4(long d, long n, ParamValue a, ParamValue b, ParamValue c,
                            DenominatorVariant v) {
  return {FamilyId::thm4, d, n, a, b, c, v};
}
TermFamily TermFamily::liu_wang(long n) { return {FamilyId::liu_wang, 4, n, {}, {}, {}, {}}; }
TermFamily TermFamily::bachraoui(long n) { return {FamilyId::bachraoui, 2, n, {}, {}, {}, {}}; }

void TermFamily::validate() const {
  switch (id) {
    case FamilyId::thm1: require_admissible(d, n, 3); break;
    case FamilyId::cor_d3:
      require(d == 3, "the d = 3 corollary has d = 3");
      require_admissible(d, n, 3);
      break;
    case FamilyId::g2_quad:
    case FamilyId::liu_wang:
      require(d == 4, "this family has d = 4");
      require_admissible(d, n, 4);
      break;
    case FamilyId::thm3:
      require_admissible(d, n, 4);
      require(c.has_value(), "missing parameter c");
      break;
    case FamilyId::lem5:
      require_admissible(d, n, 3);
      require(a.has_value() && b.has_value(), "missing parameter a or b");
      break;
    case FamilyId::thm4:
      require_admissible(d, n, 4);
      require(a.has_value() && b.has_value() && c.has_value(), "missing parameter a, b or c");
      break;
    case FamilyId::bachraoui:
      require(n >= 1 && n % 2 == 1 && std::gcd(n, 6L) == 1, "n must be odd and prime to 6");
      break;
  }
}

std::string TermFamily::name() const {
  std::string s = to_string(id) + "(";
  if (id != FamilyId::bachraoui) s += "d=" + std::to_string(d) + ",";
  s += "n=" + std::to_string(n);
  if (a) s += ",a=" + a->to_string();
  if (b) s += ",b=" + b->to_string();
  if (c) s += ",c=" + c->to_string();
  if (id == FamilyId::thm4 && variant == DenominatorVariant::literal) s += ",literal";
  return s + ")";
}

LaurentPolynomial qpoch(const Monomial& a, long step, long m) {
  if (m < 0) throw std::invalid_argument("q-shifted factorial length must be nonnegative");
  LaurentPolynomial r(1);
  for (long i = 0; i < m; ++i)
    r *= LaurentPolynomial(1) - LaurentPolynomial::monomial(a.coeff, a.exp + step * i);
  return r;
}

FactoredRF qpoch_factored(const Monomial& a, long step, long m) {
  if (m < 0) throw std::invalid_argument("q-shifted factorial length must be nonnegative");
  FactoredRF r = FactoredRF::one();
  for (long i = 0; i < m && !r.is_zero(); ++i) r *= FactoredRF::one_minus(a.coeff, a.exp + step * i);
  return r;
}

FactoredRF term_factored(const TermFamily& f, long k) {
  f.validate();
  if (k < 0) throw std::invalid_argument("term index must be nonnegative");
  const long d = f.d;
  FactoredRF num = FactoredRF::q_integer(2 * d * k + 1);
  FactoredRF den = FactoredRF::one();
  switch (f.id) {
    case FamilyId::thm1:
    case FamilyId::cor_d3:
    case FamilyId::g2_quad:
    case FamilyId::liu_wang:
      num *= poch(qm(1), d, k).pow(4) * FactoredRF::q_power((d - 2) * k);
      den = poch(qm(d), d, k).pow(4);
      break;
    case FamilyId::thm3: {
      Monomial c = param(f.c, "c");
      num *= poch(qm(1), d, k).pow(5) * poch(c * qm(1), d, k) * power(qm(2 * d - 3) * c.inverse(), k);
      den = poch(qm(d), d, k).pow(5) * poch(qm(d) * c.inverse(), d, k);
      break;
    }
    case FamilyId::lem5: {
      Monomial a = param(f.a, "a"), b = param(f.b, "b");
      num *= poch(qm(1), d, k) * poch(a * qm(1), d, k) * poch(qm(1) * a.inverse(), d, k) *
             poch(qm(1) * b.inverse(), d, k) * power(b * qm(d - 2), k);
      den = poch(qm(d), d, k) * poch(a * qm(d), d, k) * poch(qm(d) * a.inverse(), d, k) *
            poch(b * qm(d), d, k);
      break;
    }
    case FamilyId::thm4: {
      Monomial a = param(f.a, "a"), b = param(f.b, "b"), c = param(f.c, "c");
      num *= poch(a * qm(1), d, k) * poch(qm(1) * a.inverse(), d, k) * poch(b * qm(1), d, k) *
             poch(qm(1) * b.inverse(), d, k) * poch(c * qm(1), d, k) * poch(qm(1), d, k) *
             power(qm(2 * d - 3) * c.inverse(), k);
      FactoredRF first = f.variant == DenominatorVariant::corrected
                             ? poch(a * qm(d), d, k) * poch(qm(d) * a.inverse(), d, k)
                             : poch(qm(d - 1), d, k) * poch(a * qm(d), d, k);
      den = first * poch(b * qm(d), d, k) * poch(qm(d) * b.inverse(), d, k) *
            poch(qm(d) * c.inverse(), d, k) * poch(qm(d), d, k);
      break;
    }
    case FamilyId::bachraoui:
      num = FactoredRF::q_integer(8 * k + 1) * poch(qm(1), 2, k).pow(2) * poch(qm(1), 2, 2 * k) *
            FactoredRF::q_power(2 * k * k);
      den = poch(qm(6), 6, k).pow(2) * poch(qm(2), 2, 2 * k);
      break;
  }
  FactoredRF inv = den.inverse();
  return num * inv;
}

RationalFunction term(const TermFamily& f, long k) { return term_factored(f, k).to_rational_function(); }

FactoredRF lem5_single_closed_form(long d, long n, const ParamValue& bp) {
  require_admissible(d, n, 3);
  const long m = (n - 1) / d;
  Monomial b = bp.monomial();
  return FactoredRF::q_integer(n) * power(b * qm(-1), m) * poch(qm(2) * b.inverse(), d, m) *
         poch(b * qm(d), d, m).inverse();
}

FactoredRF lem6_single_closed_form(long d, long n, const ParamValue& ap) {
  require_admissible(d, n, 3);
  const long m = (n - 1) / d;
  Monomial a = ap.monomial();
  return FactoredRF::q_integer(n) * poch(qm(1), d, m) * poch(qm(d - 1), d, m) *
         (poch(a * qm(d), d, m) * poch(qm(d) * a.inverse(), d, m)).inverse();
}

FactoredRF lem6_rhs(long d, long n, const ParamValue& a) { return lem6_single_closed_form(d, n, a).pow(3); }

FactoredRF thm4_prefactor(long d, long n, const ParamValue& cp, int den_power) {
  require_admissible(d, n, 4);
  const long m = (n - 1) / d;
  Monomial c = cp.monomial();
  return FactoredRF::q_integer(n).pow(4) * power(c * qm(1), -4 * m) * poch(c * qm(2), d, m).pow(4) *
         poch(qm(d) * c.inverse(), d, m).pow(den_power).inverse();
}

FactoredRF thm4_single_prefactor(long d, long n, const ParamValue& cp) {
  require_admissible(d, n, 4);
  const long m = (n - 1) / d;
  Monomial c = cp.monomial();
  return FactoredRF::q_integer(n) * power(c * qm(1), -m) * poch(c * qm(2), d, m) *
         poch(qm(d) * c.inverse(), d, m).inverse();
}

FactoredRF thm4_inner_sum(long d, long n, const ParamValue& xp, const ParamValue& yp,
                          const ParamValue& cp) {
  require_admissible(d, n, 4);
  const long m = (n - 1) / d;
  Monomial x = xp.monomial(), y = yp.monomial(), c = cp.monomial();
  std::vector<FactoredRF> terms;
  for (long k = 0; k <= m; ++k) {
    FactoredRF num = poch(x * qm(1), d, k) * poch(qm(1) * x.inverse(), d, k) * poch(c * qm(1), d, k) *
                     poch(qm(d - 1), d, k) * FactoredRF::q_power(d * k);
    FactoredRF den = poch(y * qm(d), d, k) * poch(qm(d) * y.inverse(), d, k) * poch(c * qm(2), d, k) *
                     poch(qm(d), d, k);
    terms.push_back(num * den.inverse());
  }
  return sum(terms);
}

FactoredRF thm4_root_form_a(long d, long n, const ParamValue& a, const ParamValue& b,
                            const ParamValue& c) {
  return thm4_prefactor(d, n, c) * thm4_inner_sum(d, n, a, b, c).pow(4);
}

FactoredRF thm4_root_form_b(long d, long n, const ParamValue& a, const ParamValue& b,
                            const ParamValue& c) {
  return thm4_prefactor(d, n, c) * thm4_inner_sum(d, n, b, a, c).pow(4);
}

FactoredRF thm4_full_rhs(long d, long n, const ParamValue& ap, const ParamValue& bp,
                         const ParamValue& cp, int den_power) {
  Monomial a = ap.monomial(), b = bp.monomial();
  Monomial qn = qm(n);
  auto cubic = [&](const Monomial& x) {
    // -1 - x^2 + x q^n
    return FactoredRF::from_polynomial(LaurentPolynomial(-1) -
                                       LaurentPolynomial::monomial(x.coeff * x.coeff, 2 * x.exp) +
                                       LaurentPolynomial::monomial(x.coeff, x.exp + n));
  };
  FactoredRF w1 = one_minus(b * qn) * difference(b, qn) * cubic(a) *
                  (difference(a, b) * one_minus(a * b)).inverse();
  FactoredRF w2 = one_minus(a * qn) * difference(a, qn) * cubic(b) *
                  (difference(b, a) * one_minus(a * b)).inverse();
  std::vector<FactoredRF> parts;
  if (!w1.is_zero()) parts.push_back(w1 * thm4_inner_sum(d, n, ap, bp, cp).pow(4));
  if (!w2.is_zero()) parts.push_back(w2 * thm4_inner_sum(d, n, bp, ap, cp).pow(4));
  return thm4_prefactor(d, n, cp, den_power) * sum(parts);
}

FactoredRF rhs_factored(const TermFamily& f) {
  f.validate();
  const long d = f.d, n = f.n, m = f.m();
  switch (f.id) {
    case FamilyId::thm1:
    case FamilyId::cor_d3:
      return FactoredRF::q_integer(n).pow(3) * FactoredRF::q_power(-3 * m) *
             poch(qm(2), d, m).pow(3) * poch(qm(d), d, m).pow(3).inverse();
    case FamilyId::g2_quad: {
      std::vector<FactoredRF> terms;
      for (long k = 0; k <= m; ++k)
        terms.push_back(poch(qm(1), 4, k).pow(2) * poch(qm(3), 4, k) * FactoredRF::q_power(4 * k) *
                        (poch(qm(4), 4, k).pow(2) * poch(qm(5), 4, k)).inverse());
      return FactoredRF::q_integer(n).pow(8) * FactoredRF::q_power(4 * (1 - n)) * sum(terms).pow(4);
    }
    case FamilyId::thm3: {
      const ParamValue& c = *f.c;
      Monomial cm = c.monomial();
      std::vector<FactoredRF> terms;
      for (long k = 0; k <= m; ++k)
        terms.push_back(poch(qm(1), d, k).pow(2) * poch(cm * qm(1), d, k) * poch(qm(d - 1), d, k) *
                        FactoredRF::q_power(d * k) *
                        (poch(qm(d), d, k).pow(3) * poch(cm * qm(2), d, k)).inverse());
      return thm4_prefactor(d, n, c) * sum(terms).pow(4);
    }
    case FamilyId::lem5: return lem5_single_closed_form(d, n, *f.b).pow(3);
    case FamilyId::thm4: return thm4_full_rhs(d, n, *f.a, *f.b, *f.c);
    case FamilyId::liu_wang:
      return poch(qm(2), 4, m) * poch(qm(4), 4, m).inverse() * FactoredRF::q_integer(n) *
             FactoredRF::q_power(-m);
    case FamilyId::bachraoui:
      return FactoredRF::q_power(1 - n) * FactoredRF::q_integer(n).pow(2);
  }
  return {};
}

RationalFunction rhs(const TermFamily& f) { return rhs_factored(f).to_rational_function(); }

}  // namespace qck
