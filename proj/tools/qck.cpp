// qck: exact verification of q-supercongruences.
#include "qck/runner.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>

namespace {

struct RawOptions {
  std::string d, n, p, a, b, c;
  std::string format = "json";
  std::optional<unsigned> jobs;
};

// --jobs wins over QCK_JOBS, which wins over 1.
unsigned resolve_jobs(const std::optional<unsigned>& flag) {
  if (flag) return *flag;
  const char* env = std::getenv("QCK_JOBS");
  if (!env || !*env) return 1;
  long v = 0;
  try {
    v = qck::parse_long_list(env).at(0);
  } catch (const std::exception&) {
    throw qck::ConfigError(std::string("QCK_JOBS is not an integer: '") + env + "'");
  }
  if (v < 1 || std::string(env).find(',') != std::string::npos)
    throw qck::ConfigError(std::string("QCK_JOBS must be a positive integer: '") + env + "'");
  return static_cast<unsigned>(v);
}

void add_common(CLI::App* cmd, RawOptions& raw, qck::RunConfig& config) {
  cmd->add_option("--d", raw.d, "comma-separated list of d");
  cmd->add_option("--n", raw.n, "range A..B (filtered to admissible n) or comma-separated list");
  cmd->add_option("--p", raw.p, "comma-separated list of primes");
  cmd->add_option("--a-samples", raw.a, "rational samples for a, e.g. 2,3,7/2");
  cmd->add_option("--b-samples", raw.b, "rational samples for b");
  cmd->add_option("--c-samples", raw.c, "samples for c, e.g. q^(d-1),2,-3,5/7");
  cmd->add_option("--jobs", raw.jobs, "worker threads (default: $QCK_JOBS or 1)")->check(CLI::PositiveNumber);
  cmd->add_option("--format", raw.format, "report format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", config.out, "report path (default: stdout)");
  cmd->add_option("--seed", config.seed, "seed for sample retries and random suites");
  cmd->add_option("--time-budget-sec", config.time_budget_sec, "skip cases not started within this budget")
      ->check(CLI::NonNegativeNumber);
  cmd->add_flag("--record-timing", config.record_timing, "write measured elapsed_ms instead of 0");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checker for q-supercongruences and their p-adic counterparts"};
  app.set_version_flag("--version", qck::engine_version());
  app.require_subcommand(1);

  qck::RunConfig config;
  RawOptions raw;
  std::string theorem;
  std::vector<std::string> sweep_ids;

  auto* verify = app.add_subcommand("verify", "verify one theorem over a parameter range");
  verify->add_option("theorem", theorem, "theorem id")->required()->check(CLI::IsMember(qck::theorem_ids()));
  add_common(verify, raw, config);

  auto* identities = app.add_subcommand("identities", "run the proof-identity and adjudication suites");
  add_common(identities, raw, config);

  auto* sweep = app.add_subcommand("sweep", "verify several theorems over the cartesian product of ranges");
  sweep->add_option("theorems", sweep_ids, "theorem ids (default: thm1 thm5 thm3 liu-wang bachraoui)")
      ->check(CLI::IsMember(qck::theorem_ids()));
  add_common(sweep, raw, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return qck::exit_config;
  }

  try {
    if (*verify) {
      config.command = qck::RunConfig::Command::verify;
      config.theorems = {theorem};
    } else if (*identities) {
      config.command = qck::RunConfig::Command::identities;
    } else {
      config.command = qck::RunConfig::Command::sweep;
      config.theorems = sweep_ids.empty() ? std::vector<std::string>{"thm1", "thm5", "thm3", "liu-wang", "bachraoui"}
                                          : sweep_ids;
    }
    if (!raw.d.empty()) config.d_list = qck::parse_long_list(raw.d);
    if (!raw.n.empty()) config.n = qck::NSpec::parse(raw.n);
    if (!raw.p.empty()) config.primes = qck::parse_long_list(raw.p);
    config.a_samples = qck::split_list(raw.a);
    config.b_samples = qck::split_list(raw.b);
    config.c_samples = qck::split_list(raw.c);
    config.jobs = resolve_jobs(raw.jobs);
    config.format = raw.format == "csv" ? qck::Format::csv : qck::Format::json;
  } catch (const qck::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qck::exit_config;
  }
  return qck::run(config, std::cerr);
}
