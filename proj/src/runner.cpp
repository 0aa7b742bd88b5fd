#include "qck/runner.hpp"

#include "qck/congruence.hpp"
#include "qck/cyclotomic.hpp"
#include "qck/drivers.hpp"
#include "qck/multisum.hpp"
#include "qck/padic.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <thread>

namespace qck {

namespace {

using Clock = std::chrono::steady_clock;
using Params = std::vector<std::pair<std::string, std::string>>;

std::string str(long x) { return std::to_string(x); }

long parse_long(const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw ConfigError("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw ConfigError("not an integer: '" + s + "'");
  return v;
}

Case ready(Verdict v) {
  Verdict copy = v;
  return {std::move(v), [copy] { return copy; }};
}

Case make_case(std::string theorem, Params params, std::function<Verdict()> run) {
  return {make_verdict(std::move(theorem), std::move(params)), std::move(run)};
}

// n congruent to 1 mod `step`, or the Bachraoui condition when step is 0.
bool admissible(long n, long step) {
  if (n < 1) return false;
  if (step == 0) return n % 2 == 1 && std::gcd(n, 6L) == 1;
  return n % step == 1 % step;
}

std::vector<long> n_values(const RunConfig& config, long step) {
  if (!config.n) throw ConfigError("--n is required for this theorem");
  const NSpec& spec = *config.n;
  if (!spec.is_range) return spec.values;
  std::vector<long> out;
  for (long n = spec.lo; n <= spec.hi; ++n)
    if (admissible(n, step)) out.push_back(n);
  return out;
}

std::vector<long> d_values(const RunConfig& config, long fallback) {
  return config.d_list.empty() ? std::vector<long>{fallback} : config.d_list;
}

std::vector<Rational> rational_samples(const std::vector<std::string>& texts) {
  if (texts.empty()) return default_samples();
  std::vector<Rational> out;
  for (const auto& t : texts) {
    try {
      out.push_back(parse_rational(t));
    } catch (const std::exception&) {
      throw ConfigError("invalid rational sample '" + t + "'");
    }
    if (out.back() == 0) throw ConfigError("samples must be nonzero");
  }
  return out;
}

std::vector<ParamValue> c_values(const RunConfig& config, long d, long n) {
  if (config.c_samples.empty()) return default_c_samples(d);
  std::vector<ParamValue> out;
  for (const auto& t : config.c_samples) {
    try {
      out.push_back(parse_param(t, d, n));
    } catch (const std::exception&) {
      throw ConfigError("invalid c sample '" + t + "'");
    }
  }
  return out;
}

void add_theorem_cases(const RunConfig& config, const std::string& id, std::vector<Case>& out) {
  const std::uint64_t seed = config.seed;
  if (id == "thm1") {
    for (long d : d_values(config, 3))
      for (long n : n_values(config, std::max(d, 1L)))
        out.push_back(make_case("thm1", {{"d", str(d)}, {"n", str(n)}}, [=] { return verify_thm1(d, n); }));
  } else if (id == "thm5") {
    for (long n : n_values(config, 4))
      out.push_back(make_case("thm5", {{"n", str(n)}}, [=] { return verify_thm5(n); }));
  } else if (id == "thm3") {
    for (long d : d_values(config, 4))
      for (long n : n_values(config, std::max(d, 1L)))
        for (const ParamValue& c : c_values(config, d, n))
          out.push_back(make_case("thm3", {{"d", str(d)}, {"n", str(n)}, {"c", c.to_string()}},
                                  [=] { return verify_thm3(d, n, c); }));
  } else if (id == "liu-wang") {
    for (long n : n_values(config, 4))
      out.push_back(make_case("liu-wang", {{"n", str(n)}}, [=] { return verify_liu_wang(n); }));
  } else if (id == "bachraoui") {
    for (long n : n_values(config, 0))
      out.push_back(make_case("bachraoui", {{"n", str(n)}}, [=] { return verify_bachraoui(n); }));
  } else if (id == "lem5" || id == "lem6" || id == "lem-thm4") {
    const Lemma lemma = id == "lem5" ? Lemma::lem5 : id == "lem6" ? Lemma::lem6 : Lemma::lem_thm4;
    const auto as = rational_samples(config.a_samples), bs = rational_samples(config.b_samples);
    for (long d : d_values(config, lemma == Lemma::lem_thm4 ? 4 : 3))
      for (long n : n_values(config, std::max(d, 1L))) {
        const long least_d = lemma == Lemma::lem_thm4 ? 4 : 3;
        if (d < least_d || n < 1 || (n - 1) % d != 0) {
          Verdict v = make_verdict(id, {{"d", str(d)}, {"n", str(n)}});
          reject_with(v, "need d >= " + str(least_d) + " and n = 1 mod d");
          out.push_back(ready(v));
          continue;
        }
        for (const LemmaCase& lc : lemma_cases(lemma, d, n, as, bs, c_values(config, d, n))) {
          Case c = make_case(id, {}, [=] { return run_lemma_case(lc, seed); });
          c.stub = lemma_case_stub(lc);
          out.push_back(std::move(c));
        }
      }
  } else if (id == "g2" || id == "he") {
    if (config.primes.empty()) throw ConfigError("--p is required for " + id);
    for (long p : config.primes)
      out.push_back(make_case(id, {{"p", str(p)}}, [=] { return id == "g2" ? verify_g2(p) : verify_he(p); }));
  } else {
    throw ConfigError("unknown theorem id '" + id + "'");
  }
}

Verdict wrap_bool(std::string theorem, Params params, bool ok, const std::string& detail) {
  Verdict v = make_verdict(std::move(theorem), std::move(params));
  if (!ok) fail_with(v, {"not_equal", {}, {}, {}, {}, {}, detail});
  return v;
}

// A synthetic sequence satisfying the block-factorization hypotheses.
std::vector<Rational> synthetic_sequence(std::mt19937_64& rng, long n, int t, long L) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  auto nonzero = [&] {
    long a = 0;
    while (a == 0) a = num(rng);
    Rational x(a, den(rng));
    x.canonicalize();
    return x;
  };
  std::vector<Rational> base(static_cast<std::size_t>(n), 0);
  base[0] = 1;
  for (long k = 1; t * k <= n - 1; ++k) base[static_cast<std::size_t>(k)] = nonzero();
  std::vector<Rational> c;
  for (long l = 0; l <= L; ++l) {
    Rational block = l == 0 ? Rational(1) : nonzero();
    for (long k = 0; k < n; ++k) c.push_back(block * base[static_cast<std::size_t>(k)]);
  }
  return c;
}

void add_identity_cases(const RunConfig& config, std::vector<Case>& out) {
  std::vector<long> ns;
  if (config.n && !config.n->is_range)
    ns = config.n->values;
  else
    for (long n = config.n ? config.n->lo : 2; n <= (config.n ? config.n->hi : 30); ++n) ns.push_back(n);
  const auto samples = rational_samples(config.a_samples);
  const std::uint64_t seed = config.seed;

  for (long n : ns) {
    for (int power : {4, 5})
      out.push_back(make_case("lcm-identity", {{"n", str(n)}, {"power", str(power)}}, [=] {
        return wrap_bool("lcm-identity", {{"n", str(n)}, {"power", str(power)}}, lcm_identity_check(n, power),
                         "lcm differs from [n] Phi_n^(power-1)");
      }));
    out.push_back(make_case("crt-weights", {{"n", str(n)}, {"variant", "thm1"}},
                            [=] { return crt_weight_check(n, WeightVariant::thm1, samples, seed); }));
    out.push_back(make_case("crt-weights", {{"n", str(n)}, {"variant", "lem-thm4"}},
                            [=] { return crt_weight_check(n, WeightVariant::thm4, samples, seed); }));
    out.push_back(make_case("key-identity", {{"n", str(n)}}, [=] { return key_identity_check(n); }));
  }

  // Power identity on the root-specialized lemma families.
  for (long d : {3L, 4L})
    for (long n : {1 + d, 1 + 2 * d}) {
      auto power = [&](TermFamily f, int t, Params params) {
        out.push_back(make_case("power-identity", params, [=] {
          Verdict v = power_identity_check(f, t);
          Verdict r = make_verdict("power-identity", params);
          r.status = v.status;
          r.witness = v.witness;
          return r;
        }));
      };
      for (long s : {1L, -1L})
        for (const Rational& b : samples)
          power(TermFamily::lem5(d, n, ParamValue::q_power(s * n), ParamValue::rational(b)), 3,
                {{"family", "lem5"}, {"d", str(d)}, {"n", str(n)}, {"a", ParamValue::q_power(s * n).to_string()},
                 {"b", b.get_str()}});
      for (const Rational& a : samples)
        power(TermFamily::lem5(d, n, ParamValue::rational(a), ParamValue::q_power(n)), 3,
              {{"family", "lem6"}, {"d", str(d)}, {"n", str(n)}, {"a", a.get_str()},
               {"b", ParamValue::q_power(n).to_string()}});
      if (d == 4)
        for (const ParamValue& c : default_c_samples(d))
          for (long s : {1L, -1L})
            for (const Rational& x : samples) {
              const ParamValue root = ParamValue::q_power(s * n), other = ParamValue::rational(x);
              power(TermFamily::thm4(d, n, root, other, c), 4,
                    {{"family", "lem-thm4"}, {"d", str(d)}, {"n", str(n)}, {"a", root.to_string()},
                     {"b", other.to_string()}, {"c", c.to_string()}});
              power(TermFamily::thm4(d, n, other, root, c), 4,
                    {{"family", "lem-thm4"}, {"d", str(d)}, {"n", str(n)}, {"a", other.to_string()},
                     {"b", root.to_string()}, {"c", c.to_string()}});
            }
    }

  // Block factorization on random multiplicative sequences, each paired
  // with a perturbed copy that must be flagged.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_t(2, 4), pick_n(0, 2), pick_L(0, 3);
  const long n_choices[] = {2, 3, 5};
  for (int i = 0; i < 100; ++i) {
    const int t = pick_t(rng);
    const long n = n_choices[pick_n(rng)];
    const long L = pick_L(rng);
    std::vector<Rational> c = synthetic_sequence(rng, n, t, L);
    // Break one hypothesis: c(0) = 1, multiplicativity across blocks, or the
    // vanishing gap above (n-1)/t.
    std::vector<Rational> bad = c;
    long at = 0;
    switch (std::uniform_int_distribution<int>(0, L >= 1 ? 2 : 1)(rng)) {
      case 0: at = 0; break;
      case 1: at = std::uniform_int_distribution<long>((n - 1) / t + 1, n - 1)(rng); break;
      default:
        at = std::uniform_int_distribution<long>(1, L)(rng) * n + std::uniform_int_distribution<long>(1, n - 1)(rng);
    }
    bad[static_cast<std::size_t>(at)] += 1;
    Params params{{"i", str(i)}, {"n", str(n)}, {"t", str(t)}, {"L", str(L)}};
    out.push_back(make_case("block-factorization", params, [=] {
      Verdict v = block_factorization_check(c, n, t, L);
      Verdict r = make_verdict("block-factorization", params);
      r.status = v.status;
      r.witness = v.witness;
      return r;
    }));
    Params control = params;
    control.emplace_back("perturbed", str(at));
    out.push_back(make_case("block-factorization-control", control, [=] {
      Verdict v = block_factorization_check(bad, n, t, L);
      Verdict r = make_verdict("block-factorization-control", control);
      if (v.status != Status::hypothesis_not_satisfied)
        fail_with(r, {"not_equal", {}, {}, {}, {}, {}, "perturbed sequence not flagged"});
      return r;
    }));
  }

  for (long n : {5L, 9L, 13L})
    out.push_back(make_case("thm3-thm5-consistency", {{"n", str(n)}},
                            [=] { return specialization_consistency_check(n); }));
  for (long n : {5L, 9L}) {
    const ParamValue b = ParamValue::rational(2), c = ParamValue::rational(3);
    out.push_back(make_case("adjudicate-denominator",
                            {{"d", "4"}, {"n", str(n)}, {"b", b.to_string()}, {"c", c.to_string()}},
                            [=] { return denominator_adjudication(4, n, b, c); }));
    out.push_back(make_case("adjudicate-prefactor-exponent",
                            {{"d", "4"}, {"n", str(n)}, {"b", b.to_string()}, {"c", c.to_string()}},
                            [=] { return prefactor_exponent_adjudication(4, n, b, c); }));
  }
  for (long p : {5L, 7L, 13L})
    out.push_back(make_case("padic-gamma-sanity", {{"p", str(p)}}, [=] { return padic_gamma_sanity(p); }));
}

}  // namespace

NSpec NSpec::parse(const std::string& text) {
  NSpec s;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    s.lo = parse_long(text.substr(0, dots));
    s.hi = parse_long(text.substr(dots + 2));
    if (s.lo > s.hi) throw ConfigError("empty range '" + text + "'");
    return s;
  }
  s.is_range = false;
  s.values = parse_long_list(text);
  if (s.values.empty()) throw ConfigError("empty n list");
  return s;
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"thm1",      "thm3", "thm5", "lem5", "lem6", "lem-thm4",
                                            "liu-wang", "bachraoui", "g2", "he"};
  return ids;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  for (const auto& s : out)
    if (s.empty()) throw ConfigError("empty item in list '" + text + "'");
  return out;
}

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  for (const auto& s : split_list(text)) out.push_back(parse_long(s));
  return out;
}

std::vector<Case> enumerate_cases(const RunConfig& config) {
  std::vector<Case> out;
  switch (config.command) {
    case RunConfig::Command::verify:
      if (config.theorems.size() != 1) throw ConfigError("verify takes exactly one theorem id");
      add_theorem_cases(config, config.theorems.front(), out);
      break;
    case RunConfig::Command::sweep: {
      if (config.theorems.empty()) throw ConfigError("sweep needs at least one theorem id");
      for (const auto& id : config.theorems) add_theorem_cases(config, id, out);
      break;
    }
    case RunConfig::Command::identities: add_identity_cases(config, out); break;
  }
  return out;
}

std::vector<Verdict> execute(const std::vector<Case>& cases, unsigned jobs, std::optional<double> budget,
                             bool record_timing) {
  std::vector<Verdict> out(cases.size());
  std::atomic<std::size_t> next{0};
  const auto start = Clock::now();
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cases.size()) return;
      const double used = std::chrono::duration<double>(Clock::now() - start).count();
      if (budget && used >= *budget) {
        out[i] = cases[i].stub;
        if (out[i].status == Status::pass) {
          out[i].status = Status::skipped;
          out[i].witness = Witness{"skipped", {}, {}, {}, {}, {}, "time budget exhausted"};
        }
        continue;
      }
      const auto t0 = Clock::now();
      Verdict v;
      try {
        v = cases[i].run();
      } catch (const std::exception& err) {
        v = cases[i].stub;
        fail_with(v, {"error", {}, {}, {}, {}, {}, err.what()});
      }
      v.elapsed_ms = record_timing ? std::chrono::duration<double, std::milli>(Clock::now() - t0).count() : 0;
      out[i] = std::move(v);
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(cases.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
  }
  return out;
}

int exit_status(const std::vector<Verdict>& verdicts) {
  for (const auto& v : verdicts)
    if (v.status != Status::pass && v.status != Status::rejected) return exit_failures;
  return exit_ok;
}

int run(const RunConfig& config, std::ostream& log) {
  std::vector<Case> cases;
  try {
    if (config.jobs < 1) throw ConfigError("--jobs must be at least 1");
    cases = enumerate_cases(config);
  } catch (const ConfigError& err) {
    log << "error: " << err.what() << "\n";
    return exit_config;
  }
  std::vector<Verdict> verdicts = execute(cases, config.jobs, config.time_budget_sec, config.record_timing);
  try {
    emit_report(verdicts, config.format, config.out);
  } catch (const std::runtime_error& err) {
    log << "error: " << err.what() << "\n";
    return exit_io;
  }
  std::map<Status, long> counts;
  for (const auto& v : verdicts) ++counts[v.status];
  log << verdicts.size() << " cases:";
  for (Status s : {Status::pass, Status::fail, Status::rejected, Status::hypothesis_not_satisfied, Status::skipped})
    if (counts[s]) log << " " << counts[s] << " " << to_string(s);
  log << "\n";
  if (cases.empty()) return exit_no_cases;
  return exit_status(verdicts);
}

}  // namespace qck
