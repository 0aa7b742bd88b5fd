#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qck {

enum class Status { pass, fail, rejected, hypothesis_not_satisfied, skipped };

std::string to_string(Status s);

struct Witness {
  // gcd_obstruction, not_divisible, not_equal, not_one, hypothesis,
  // parameter_pole, residue_mismatch, rejected
  std::string kind;
  std::optional<std::string> factor;
  std::optional<long> factor_degree;
  std::optional<long> remainder_degree;
  std::optional<long> required_multiplicity;
  std::optional<long> found_multiplicity;
  std::string detail;
};

struct ModulusSummary {
  long n = 0;
  int e = 0;
  long degree = 0;
  std::string text;
};

struct Verdict {
  std::string case_id;
  std::string theorem;
  std::vector<std::pair<std::string, std::string>> params;
  std::optional<ModulusSummary> modulus;
  Status status = Status::pass;
  std::optional<Witness> witness;
  double elapsed_ms = 0;

  bool passed() const { return status == Status::pass; }
};

Verdict make_verdict(std::string theorem, std::vector<std::pair<std::string, std::string>> params);

// Joins theorem and params into "theorem/k=v/k=v".
std::string case_id_of(const std::string& theorem,
                       const std::vector<std::pair<std::string, std::string>>& params);

void fail_with(Verdict& v, Witness w);
void reject_with(Verdict& v, const std::string& reason);

}  // namespace qck
