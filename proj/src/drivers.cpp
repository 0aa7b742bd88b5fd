#include "qck/drivers.hpp"

#include <functional>
#include <random>
#include <stdexcept>

namespace qck {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

std::string str(long x) { return std::to_string(x); }

Witness not_equal(std::string detail) { return {"not_equal", {}, {}, {}, {}, {}, std::move(detail)}; }

ModulusSummary summary(const FactoredModulus& m) { return {m.n, m.e, m.degree(), m.describe()}; }

// Runs lhs == rhs (mod [n] Phi_n^e) on a prepared verdict, applying the
// perturbation to the right side.
void run_congruence(Verdict& v, const FactoredRF& lhs, FactoredRF rhs, long n, int e, Perturbation p) {
  if (p == Perturbation::rhs_times_q) rhs = rhs * FactoredRF::q_power(1);
  if (p == Perturbation::raised_modulus) {
    rhs = rhs + FactoredRF::q_integer(n) * FactoredRF::from_polynomial(cyclotomic(n)).pow(e);
    ++e;
  }
  FactoredModulus m = build_modulus(n, e);
  v.modulus = summary(m);
  if (auto w = congruence_witness(lhs, rhs, m)) fail_with(v, *w);
}

Params with_perturbation(Params params, Perturbation p) {
  if (p == Perturbation::rhs_times_q) params.emplace_back("control", "rhs*q");
  if (p == Perturbation::raised_modulus) params.emplace_back("control", "raised-modulus");
  return params;
}

// Builds the family, rejecting on violated hypotheses, then runs the
// simplex-sum congruence.
Verdict simplex_driver(const std::string& theorem, Params params, const std::function<TermFamily()>& make,
                       int t, int e, Perturbation p) {
  Verdict v = make_verdict(theorem, with_perturbation(std::move(params), p));
  TermFamily f;
  try {
    f = make();
    f.validate();
  } catch (const std::invalid_argument& err) {
    reject_with(v, err.what());
    return v;
  }
  try {
    FactoredRF lhs = simplex_sum_factored({f, t, f.n - 1});
    run_congruence(v, lhs, rhs_factored(f), f.n, e, p);
  } catch (const std::domain_error& err) {
    fail_with(v, {"parameter_pole", {}, {}, {}, {}, {}, err.what()});
  }
  return v;
}

}  // namespace

std::vector<Rational> default_samples() { return {2, 3, 5, Rational(7, 2), -2}; }

std::vector<ParamValue> default_c_samples(long d) {
  return {ParamValue::q_power(d - 1), ParamValue::rational(2), ParamValue::rational(-3),
          ParamValue::rational(Rational(5, 7))};
}

Verdict verify_thm1(long d, long n, Perturbation p) {
  return simplex_driver("thm1", {{"d", str(d)}, {"n", str(n)}}, [&] { return TermFamily::thm1(d, n); }, 3, 3, p);
}

Verdict verify_thm5(long n, Perturbation p) {
  return simplex_driver("thm5", {{"n", str(n)}}, [&] { return TermFamily::g2_quad(n); }, 4, 4, p);
}

Verdict verify_thm3(long d, long n, const ParamValue& c, Perturbation p) {
  Verdict v = simplex_driver("thm3", {{"d", str(d)}, {"n", str(n)}, {"c", c.to_string()}},
                             [&] { return TermFamily::thm3(d, n, c); }, 4, 4, p);
  if (v.status == Status::pass && p == Perturbation::none && d == 4 && c == ParamValue::q_power(3)) {
    Verdict s = specialization_consistency_check(n);
    if (!s.passed()) fail_with(v, *s.witness);
  }
  return v;
}

std::vector<Verdict> verify_thm3(long d, long n, const std::vector<ParamValue>& cs) {
  std::vector<Verdict> out;
  for (const auto& c : cs) out.push_back(verify_thm3(d, n, c));
  return out;
}

Verdict verify_liu_wang(long n, Perturbation p) {
  Verdict v = make_verdict("liu-wang", with_perturbation({{"n", str(n)}}, p));
  TermFamily f;
  try {
    f = TermFamily::liu_wang(n);
    f.validate();
  } catch (const std::invalid_argument& err) {
    reject_with(v, err.what());
    return v;
  }
  run_congruence(v, truncated_sum_factored(f, f.m()), rhs_factored(f), n, 2, p);
  return v;
}

Verdict verify_bachraoui(long n, Perturbation p) {
  return simplex_driver("bachraoui", {{"n", str(n)}}, [&] { return TermFamily::bachraoui(n); }, 2, 2, p);
}

Verdict specialization_consistency_check(long n) {
  Verdict v = make_verdict("thm3-thm5-consistency", {{"n", str(n)}});
  TermFamily g, t;
  try {
    g = TermFamily::g2_quad(n);
    t = TermFamily::thm3(4, n, ParamValue::q_power(3));
    g.validate();
    t.validate();
  } catch (const std::invalid_argument& err) {
    reject_with(v, err.what());
    return v;
  }
  for (long k = 0; k < n; ++k)
    if (!(term(g, k) == term(t, k))) {
      fail_with(v, not_equal("summands differ at k=" + str(k)));
      return v;
    }
  const std::string a = rhs(g).to_string(), b = rhs(t).to_string();
  if (a != b) fail_with(v, not_equal("reduced right sides differ"));
  return v;
}

std::string to_string(Lemma l) {
  switch (l) {
    case Lemma::lem5: return "lem5";
    case Lemma::lem6: return "lem6";
    case Lemma::lem_thm4: return "lem-thm4";
  }
  return "?";
}

std::string to_string(LemmaCheck c) {
  switch (c) {
    case LemmaCheck::root_a: return "root-a";
    case LemmaCheck::root_b: return "root-b";
    case LemmaCheck::mod_n: return "mod-n";
    case LemmaCheck::truncation: return "truncation";
  }
  return "?";
}

namespace {

TermFamily lemma_family(const LemmaCase& lc) {
  if (lc.lemma == Lemma::lem_thm4) {
    if (!lc.c) throw std::invalid_argument("missing parameter c");
    return TermFamily::thm4(lc.d, lc.n, lc.a, lc.b, *lc.c, lc.variant);
  }
  return TermFamily::lem5(lc.d, lc.n, lc.a, lc.b);
}

// The parameter-dependent denominator entries (aq^d, q^d/a, bq^d, q^d/b and
// q^d/c) up to n-1 terms must be prime to [n]; a q-power specialization can
// cancel the numerator factor that makes the tail vanish modulo [n].
std::optional<long> denominator_meets_modulus(const LemmaCase& lc) {
  const long d = lc.d, n = lc.n;
  const Monomial qd{1, d};
  std::vector<Monomial> entries{lc.a.monomial() * qd, qd * lc.a.monomial().inverse(), lc.b.monomial() * qd,
                                qd * lc.b.monomial().inverse()};
  if (lc.c) entries.push_back(qd * lc.c->monomial().inverse());
  for (const Monomial& x : entries) {
    FactoredRF p = qpoch_factored(x, d, n - 1);
    for (long f : divisors(n))
      if (f > 1 && p.valuation({f, 0}) > 0) return f;
  }
  return std::nullopt;
}

int lemma_power(Lemma l) { return l == Lemma::lem_thm4 ? 4 : 3; }

void check_lemma(Verdict& v, const LemmaCase& lc) {
  TermFamily f = lemma_family(lc);
  f.validate();
  const long n = lc.n, d = lc.d;
  const int t = lemma_power(lc.lemma);
  switch (lc.check) {
    case LemmaCheck::mod_n: {
      if (auto f_bad = denominator_meets_modulus(lc)) {
        fail_with(v, {"hypothesis", "Phi_" + str(*f_bad), euler_phi(*f_bad), {}, {}, {},
                      "the specialization puts a factor of [n] into a summand denominator"});
        return;
      }
      FactoredModulus m = build_modulus(n, 0);
      v.modulus = summary(m);
      FactoredRF lhs = simplex_sum_factored({f, t, n - 1});
      if (auto w = congruence_witness(lhs, FactoredRF::constant(0), m)) fail_with(v, *w);
      return;
    }
    case LemmaCheck::truncation: {
      FactoredRF a = truncated_sum_factored(f, f.m()), b = truncated_sum_factored(f, n - 1);
      if (!(a - b).is_zero()) fail_with(v, not_equal("sums up to (n-1)/d and n-1 differ"));
      return;
    }
    case LemmaCheck::root_a:
    case LemmaCheck::root_b: {
      FactoredRF closed_single, closed;
      switch (lc.lemma) {
        case Lemma::lem5:
          closed_single = lem5_single_closed_form(d, n, lc.b);
          closed = closed_single.pow(3);
          break;
        case Lemma::lem6:
          closed_single = lem6_single_closed_form(d, n, lc.a);
          closed = lem6_rhs(d, n, lc.a);
          break;
        case Lemma::lem_thm4:
          if (lc.check == LemmaCheck::root_a) {
            closed_single = thm4_single_prefactor(d, n, *lc.c) * thm4_inner_sum(d, n, lc.a, lc.b, *lc.c);
            closed = thm4_root_form_a(d, n, lc.a, lc.b, *lc.c);
          } else {
            closed_single = thm4_single_prefactor(d, n, *lc.c) * thm4_inner_sum(d, n, lc.b, lc.a, *lc.c);
            closed = thm4_root_form_b(d, n, lc.a, lc.b, *lc.c);
          }
          break;
      }
      if (!(truncated_sum_factored(f, f.m()) - closed_single).is_zero()) {
        fail_with(v, not_equal("single sum differs from its closed form"));
        return;
      }
      FactoredRF lhs = simplex_sum_factored({f, t, n - 1});
      if (!(lhs - closed).is_zero()) fail_with(v, not_equal("simplex sum differs from the power of the closed form"));
      return;
    }
  }
}

Params lemma_params(const LemmaCase& lc) {
  Params p{{"d", str(lc.d)}, {"n", str(lc.n)}, {"check", to_string(lc.check)},
           {"a", lc.a.to_string()}, {"b", lc.b.to_string()}};
  if (lc.c) p.emplace_back("c", lc.c->to_string());
  if (lc.variant == DenominatorVariant::literal) p.emplace_back("variant", "literal");
  return p;
}

}  // namespace

Verdict lemma_case_stub(const LemmaCase& lc) { return make_verdict(to_string(lc.lemma), lemma_params(lc)); }

Verdict run_lemma_case(const LemmaCase& lc0, std::uint64_t seed) {
  Verdict v = lemma_case_stub(lc0);
  LemmaCase lc = lc0;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(-50, 50);
  auto draw = [&](ParamValue& p) {
    if (p.kind != ParamValue::Kind::rational) return;
    long num = 0, den = 0;
    while (num == 0 || den <= 0) num = pick(rng), den = pick(rng);
    Rational x(num, den);
    x.canonicalize();
    p = ParamValue::rational(x);
  };
  for (int attempt = 0;; ++attempt) {
    try {
      check_lemma(v, lc);
      if (attempt > 0)
        v.params.emplace_back("resampled", "a=" + lc.a.to_string() + ",b=" + lc.b.to_string() +
                                               (lc.c ? ",c=" + lc.c->to_string() : ""));
      return v;
    } catch (const std::invalid_argument& err) {
      reject_with(v, err.what());
      return v;
    } catch (const std::domain_error& err) {
      if (attempt >= 8) {
        fail_with(v, {"parameter_pole", {}, {}, {}, {}, {}, err.what()});
        return v;
      }
      draw(lc.a);
      draw(lc.b);
      if (lc.c) draw(*lc.c);
    }
  }
}

std::vector<LemmaCase> lemma_cases(Lemma lemma, long d, long n, const std::vector<Rational>& a_samples,
                                   const std::vector<Rational>& b_samples,
                                   const std::vector<ParamValue>& c_samples) {
  std::vector<LemmaCase> out;
  const ParamValue qn = ParamValue::q_power(n), qmn = ParamValue::q_power(-n);
  std::vector<std::optional<ParamValue>> cs;
  if (lemma == Lemma::lem_thm4)
    for (const auto& c : c_samples) cs.emplace_back(c);
  else
    cs.emplace_back(std::nullopt);
  auto add = [&](LemmaCheck check, const ParamValue& a, const ParamValue& b) {
    for (const auto& c : cs) out.push_back({lemma, check, d, n, a, b, c, DenominatorVariant::corrected});
  };
  auto at_a_roots = [&](LemmaCheck check) {
    for (const auto& root : {qn, qmn})
      for (const auto& b : b_samples) add(check, root, ParamValue::rational(b));
  };
  auto at_b_roots = [&](LemmaCheck check, bool both_signs) {
    for (const auto& root : both_signs ? std::vector{qn, qmn} : std::vector{qn})
      for (const auto& a : a_samples) add(check, ParamValue::rational(a), root);
  };
  switch (lemma) {
    case Lemma::lem5:
      at_a_roots(LemmaCheck::root_a);
      at_a_roots(LemmaCheck::truncation);
      break;
    case Lemma::lem6:
      at_b_roots(LemmaCheck::root_b, false);
      at_b_roots(LemmaCheck::truncation, false);
      break;
    case Lemma::lem_thm4:
      at_a_roots(LemmaCheck::root_a);
      at_b_roots(LemmaCheck::root_b, true);
      at_a_roots(LemmaCheck::truncation);
      at_b_roots(LemmaCheck::truncation, true);
      break;
  }
  // The mod-[n] part is taken at rational specializations only.
  if (lemma == Lemma::lem_thm4) {
    std::erase_if(cs, [](const auto& c) { return c->kind != ParamValue::Kind::rational; });
    if (cs.empty()) return out;
  }
  for (const auto& a : a_samples)
    for (const auto& b : b_samples) add(LemmaCheck::mod_n, ParamValue::rational(a), ParamValue::rational(b));
  return out;
}

namespace {

std::vector<Verdict> run_all(const std::vector<LemmaCase>& cases) {
  std::vector<Verdict> out;
  for (const auto& lc : cases) out.push_back(run_lemma_case(lc));
  return out;
}

}  // namespace

std::vector<Verdict> verify_lem5(long d, long n, const std::vector<Rational>& b_samples,
                                 const std::vector<Rational>& a_samples) {
  return run_all(lemma_cases(Lemma::lem5, d, n, a_samples, b_samples, {}));
}

std::vector<Verdict> verify_lem6(long d, long n, const std::vector<Rational>& a_samples,
                                 const std::vector<Rational>& b_samples) {
  return run_all(lemma_cases(Lemma::lem6, d, n, a_samples, b_samples, {}));
}

std::vector<Verdict> verify_lem_thm4(long d, long n, const std::vector<Rational>& b_samples,
                                     const std::vector<ParamValue>& c_samples,
                                     const std::vector<Rational>& a_samples) {
  return run_all(lemma_cases(Lemma::lem_thm4, d, n, a_samples, b_samples, c_samples));
}

Verdict denominator_adjudication(long d, long n, const ParamValue& b, const ParamValue& c) {
  Verdict v = make_verdict("adjudicate-denominator",
                           {{"d", str(d)}, {"n", str(n)}, {"b", b.to_string()}, {"c", c.to_string()}});
  try {
    for (long s : {1L, -1L}) {
      LemmaCase lc{Lemma::lem_thm4, LemmaCheck::root_a, d, n, ParamValue::q_power(s * n), b, c,
                   DenominatorVariant::corrected};
      Verdict ok = make_verdict("", {});
      check_lemma(ok, lc);
      lc.variant = DenominatorVariant::literal;
      Verdict bad = make_verdict("", {});
      check_lemma(bad, lc);
      const std::string where = " at a=" + lc.a.to_string();
      if (!ok.passed()) {
        fail_with(v, not_equal("symmetric denominator fails" + where));
        return v;
      }
      if (bad.passed()) {
        fail_with(v, not_equal("printed denominator also satisfies the root equality" + where));
        return v;
      }
    }
  } catch (const std::invalid_argument& err) {
    reject_with(v, err.what());
  }
  return v;
}

Verdict prefactor_exponent_adjudication(long d, long n, const ParamValue& b, const ParamValue& c) {
  Verdict v = make_verdict("adjudicate-prefactor-exponent",
                           {{"d", str(d)}, {"n", str(n)}, {"b", b.to_string()}, {"c", c.to_string()}});
  try {
    const ParamValue a = ParamValue::q_power(n);
    TermFamily f = TermFamily::thm4(d, n, a, b, c);
    f.validate();
    FactoredRF lhs = simplex_sum_factored({f, 4, n - 1});
    if (!(lhs - thm4_full_rhs(d, n, a, b, c, 4)).is_zero())
      fail_with(v, not_equal("exponent 4 does not match at a=q^n"));
    else if ((lhs - thm4_full_rhs(d, n, a, b, c, 1)).is_zero())
      fail_with(v, not_equal("exponent 1 also matches at a=q^n"));
  } catch (const std::invalid_argument& err) {
    reject_with(v, err.what());
  }
  return v;
}

}  // namespace qck
