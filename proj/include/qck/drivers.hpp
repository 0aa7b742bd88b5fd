#pragma once

#include "qck/congruence.hpp"
#include "qck/multisum.hpp"
#include "qck/qseries.hpp"
#include "qck/verdict.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qck {

// Negative controls applied to a driver's right side.
//   rhs_times_q:    rhs * q against the stated modulus.
//   raised_modulus: rhs + [n] Phi_n^e, congruent to rhs modulo the stated
//                   modulus, checked against the exponent e + 1.
enum class Perturbation { none, rhs_times_q, raised_modulus };

std::vector<Rational> default_samples();
// q^(d-1), 2, -3, 5/7
std::vector<ParamValue> default_c_samples(long d);

Verdict verify_thm1(long d, long n, Perturbation p = Perturbation::none);
Verdict verify_thm5(long n, Perturbation p = Perturbation::none);
// At d = 4, c = q^3 also requires the reduced right side to coincide with
// verify_thm5's.
Verdict verify_thm3(long d, long n, const ParamValue& c, Perturbation p = Perturbation::none);
std::vector<Verdict> verify_thm3(long d, long n, const std::vector<ParamValue>& cs);
Verdict verify_liu_wang(long n, Perturbation p = Perturbation::none);
Verdict verify_bachraoui(long n, Perturbation p = Perturbation::none);

enum class Lemma { lem5, lem6, lem_thm4 };
enum class LemmaCheck { root_a, root_b, mod_n, truncation };

std::string to_string(Lemma l);
std::string to_string(LemmaCheck c);

// One exact check of a parametric lemma at one specialization.
//   root_a / root_b: the simplex sum equals its closed form at a (resp. b)
//                    a root of the modulus, and so does the single sum.
//   mod_n:           the simplex sum vanishes modulo [n].
//   truncation:      the single sum is the same up to (n-1)/d and n-1.
struct LemmaCase {
  Lemma lemma = Lemma::lem5;
  LemmaCheck check = LemmaCheck::root_a;
  long d = 3;
  long n = 1;
  ParamValue a, b;
  std::optional<ParamValue> c;
  DenominatorVariant variant = DenominatorVariant::corrected;
};

// A rational sample that lands on a pole is replaced by values drawn from a
// stream seeded with seed (bounded retries).
Verdict run_lemma_case(const LemmaCase& lc, std::uint64_t seed = 0);
// The case id and parameters of run_lemma_case without running it.
Verdict lemma_case_stub(const LemmaCase& lc);

std::vector<LemmaCase> lemma_cases(Lemma lemma, long d, long n, const std::vector<Rational>& a_samples,
                                   const std::vector<Rational>& b_samples,
                                   const std::vector<ParamValue>& c_samples);

std::vector<Verdict> verify_lem5(long d, long n, const std::vector<Rational>& b_samples,
                                 const std::vector<Rational>& a_samples);
std::vector<Verdict> verify_lem6(long d, long n, const std::vector<Rational>& a_samples,
                                 const std::vector<Rational>& b_samples);
std::vector<Verdict> verify_lem_thm4(long d, long n, const std::vector<Rational>& b_samples,
                                     const std::vector<ParamValue>& c_samples,
                                     const std::vector<Rational>& a_samples);

// The d = 4, c = q^3 specialization of the parametric quadruple sum has the
// same summand and the same reduced right side as the quadruple sum.
Verdict specialization_consistency_check(long n);

// Passes when the symmetric denominator satisfies the root equality at
// a = q^(+-n) and the printed variant does not.
Verdict denominator_adjudication(long d, long n, const ParamValue& b, const ParamValue& c);
// Passes when the full right side at a = q^n matches with prefactor
// exponent 4 and not with exponent 1.
Verdict prefactor_exponent_adjudication(long d, long n, const ParamValue& b, const ParamValue& c);

}  // namespace qck
