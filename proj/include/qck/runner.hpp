#pragma once

#include "qck/report.hpp"
#include "qck/verdict.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qck {

// Invalid configuration: bad range, unknown theorem id, missing flag.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum ExitCode : int { exit_ok = 0, exit_failures = 1, exit_config = 2, exit_no_cases = 3, exit_io = 4 };

// "A..B" is a range, filtered per theorem to admissible n; "a,b,c" or a
// single value is an explicit list whose inadmissible members become
// rejected records.
struct NSpec {
  bool is_range = true;
  long lo = 0, hi = -1;
  std::vector<long> values;

  static NSpec parse(const std::string& text);
  bool empty() const { return is_range ? lo > hi : values.empty(); }
};

struct RunConfig {
  enum class Command { verify, identities, sweep };
  Command command = Command::verify;
  std::vector<std::string> theorems;
  std::vector<long> d_list;
  std::optional<NSpec> n;
  std::vector<long> primes;
  std::vector<std::string> a_samples, b_samples, c_samples;
  unsigned jobs = 1;
  Format format = Format::json;
  std::string out;
  std::uint64_t seed = 0;
  std::optional<double> time_budget_sec;
  bool record_timing = false;
};

// A pending case: the stub carries the id and parameters used when the case
// is never run (rejected up front or skipped on the time budget).
struct Case {
  Verdict stub;
  std::function<Verdict()> run;
};

const std::vector<std::string>& theorem_ids();

// Splits "2,3,7/2" style lists; empty input gives an empty list.
std::vector<std::string> split_list(const std::string& text);
std::vector<long> parse_long_list(const std::string& text);

// Throws ConfigError on invalid configurations.
std::vector<Case> enumerate_cases(const RunConfig& config);

// Runs the cases on a pool of jobs workers. Cases not started before the
// budget expires are reported as skipped.
std::vector<Verdict> execute(const std::vector<Case>& cases, unsigned jobs,
                             std::optional<double> time_budget_sec, bool record_timing);

int exit_status(const std::vector<Verdict>& verdicts);

// Enumerate, execute, emit. Returns the process exit status; writes a
// one-line summary and any error to log.
int run(const RunConfig& config, std::ostream& log);

}  // namespace qck
