#include "qck/verdict.hpp"

namespace qck {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::rejected: return "rejected";
    case Status::hypothesis_not_satisfied: return "hypothesis_not_satisfied";
    case Status::skipped: return "skipped";
  }
  return "?";
}

std::string case_id_of(const std::string& theorem,
                       const std::vector<std::pair<std::string, std::string>>& params) {
  std::string id = theorem;
  for (const auto& [k, v] : params) id += "/" + k + "=" + v;
  return id;
}

Verdict make_verdict(std::string theorem, std::vector<std::pair<std::string, std::string>> params) {
  Verdict v;
  v.case_id = case_id_of(theorem, params);
  v.theorem = std::move(theorem);
  v.params = std::move(params);
  return v;
}

void fail_with(Verdict& v, Witness w) {
  v.status = w.kind == "hypothesis" ? Status::hypothesis_not_satisfied : Status::fail;
  v.witness = std::move(w);
}

void reject_with(Verdict& v, const std::string& reason) {
  v.status = Status::rejected;
  v.witness = Witness{"rejected", {}, {}, {}, {}, {}, reason};
}

}  // namespace qck
