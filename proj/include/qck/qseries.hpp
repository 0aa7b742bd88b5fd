#pragma once

#include "qck/factored.hpp"
#include "qck/laurent_polynomial.hpp"
#include "qck/rational_function.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace qck {

// coeff * q^exp
struct Monomial {
  Rational coeff = 1;
  long exp = 0;

  Monomial inverse() const;
  friend Monomial operator*(const Monomial& x, const Monomial& y) {
    return {x.coeff * y.coeff, x.exp + y.exp};
  }
};

// A specialization of one of the indeterminates a, b, c: a nonzero
// rational, or a signed power of q.
struct ParamValue {
  enum class Kind { rational, q_power };
  Kind kind = Kind::rational;
  Rational value = 1;
  long exponent = 0;

  static ParamValue rational(const Rational& v) { return {Kind::rational, v, 0}; }
  static ParamValue q_power(long e) { return {Kind::q_power, 1, e}; }

  Monomial monomial() const;
  std::string to_string() const;
  bool operator==(const ParamValue& o) const {
    return kind == o.kind && value == o.value && exponent == o.exponent;
  }
};

// Parses "7/2", "-3", "q", "q^5", "q^-5", and the symbolic exponents
// "q^n", "q^-n", "q^(d-1)" resolved against the given d and n.
ParamValue parse_param(std::string_view text, long d, long n);

enum class FamilyId { thm1, cor_d3, g2_quad, thm3, lem5, thm4, liu_wang, bachraoui };

// Denominator of the four-parameter summand: the symmetric form
// (aq^d, q^d/a, bq^d, q^d/b, q^d/c, q^d) or the printed variant whose first
// entry is q^d/q instead of q^d/a.
enum class DenominatorVariant { corrected, literal };

struct TermFamily {
  FamilyId id = FamilyId::thm1;
  long d = 3;
  long n = 1;
  std::optional<ParamValue> a, b, c;
  DenominatorVariant variant = DenominatorVariant::corrected;

  static TermFamily thm1(long d, long n);
  static TermFamily cor_d3(long n);
  static TermFamily g2_quad(long n);
  static TermFamily thm3(long d, long n, ParamValue c);
  static TermFamily lem5(long d, long n, ParamValue a, ParamValue b);
  static TermFamily thm4(long d, long n, ParamValue a, ParamValue b, ParamValue c,
                         DenominatorVariant v = DenominatorVariant::corrected);
  static TermFamily liu_wang(long n);
  static TermFamily bachraoui(long n);

  // Throws std::invalid_argument when d, n violate the family's hypotheses.
  void validate() const;
  // (n-1)/d, the truncation point of the closed forms.
  long m() const { return (n - 1) / d; }
  std::string name() const;
};

std::string to_string(FamilyId id);

// prod_{i<m} (1 - a q^(step*i))
LaurentPolynomial qpoch(const Monomial& a, long step, long m);
FactoredRF qpoch_factored(const Monomial& a, long step, long m);

FactoredRF term_factored(const TermFamily& f, long k);
RationalFunction term(const TermFamily& f, long k);

// Right side of the congruence attached to the family.
FactoredRF rhs_factored(const TermFamily& f);
RationalFunction rhs(const TermFamily& f);

// Single-sum values at the root specializations used by the lemma proofs.
// [n] (b/q)^m (q^2/b;q^d)_m / (bq^d;q^d)_m
FactoredRF lem5_single_closed_form(long d, long n, const ParamValue& b);
// [n] (q, q^(d-1); q^d)_m / (aq^d, q^d/a; q^d)_m
FactoredRF lem6_single_closed_form(long d, long n, const ParamValue& a);
// The cube of lem6_single_closed_form.
FactoredRF lem6_rhs(long d, long n, const ParamValue& a);

// [n]^4 (cq)^(4(1-n)/d) (cq^2;q^d)_m^4 / (q^d/c;q^d)_m^den_power
FactoredRF thm4_prefactor(long d, long n, const ParamValue& c, int den_power = 4);
// [n] (cq)^((1-n)/d) (cq^2;q^d)_m / (q^d/c;q^d)_m
FactoredRF thm4_single_prefactor(long d, long n, const ParamValue& c);
// sum_{k<=m} (xq, q/x, cq, q^(d-1); q^d)_k / (yq^d, q^d/y, cq^2, q^d; q^d)_k q^(dk)
FactoredRF thm4_inner_sum(long d, long n, const ParamValue& x, const ParamValue& y,
                          const ParamValue& c);
// Fourth-power forms at a = q^(+-n) (first) and b = q^(+-n) (second).
FactoredRF thm4_root_form_a(long d, long n, const ParamValue& a, const ParamValue& b,
                            const ParamValue& c);
FactoredRF thm4_root_form_b(long d, long n, const ParamValue& a, const ParamValue& b,
                            const ParamValue& c);
// The full right side of the four-parameter lemma, with the exponent of
// the (q^d/c;q^d)_m prefactor as a parameter.
FactoredRF thm4_full_rhs(long d, long n, const ParamValue& a, const ParamValue& b,
                         const ParamValue& c, int den_power = 4);

}  // namespace qck
