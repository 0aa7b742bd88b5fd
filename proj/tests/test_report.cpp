#include "qck/drivers.hpp"
#include "qck/report.hpp"
#include "qck/runner.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace qck;
using Json = nlohmann::json;

namespace {

RunConfig verify_config(const std::string& id, const std::string& n, std::vector<long> d = {}) {
  RunConfig c;
  c.command = RunConfig::Command::verify;
  c.theorems = {id};
  c.n = NSpec::parse(n);
  c.d_list = std::move(d);
  return c;
}

std::vector<Verdict> run_all(const RunConfig& c, unsigned jobs = 1) {
  return execute(enumerate_cases(c), jobs, c.time_budget_sec, false);
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("empty reports") {
  CHECK(render_report({}, Format::json) == "[]\n");
  const std::string csv = render_report({}, Format::csv);
  CHECK(count_lines(csv) == 1);
  CHECK(csv.rfind("case_id,theorem,", 0) == 0);
  // 17 columns
  CHECK(std::count(csv.begin(), csv.end(), ',') == 16);
}

TEST_CASE("json records") {
  Json j = Json::parse(render_report({verify_thm1(3, 7), verify_thm1(3, 4)}, Format::json));
  REQUIRE(j.size() == 2);
  // natural order: n=4 first
  CHECK(j[0]["case_id"] == "thm1/d=3/n=4");
  CHECK(j[0]["passed"] == false);
  CHECK(j[0]["status"] == "fail");
  CHECK(j[0]["witness"]["kind"] == "not_divisible");
  CHECK(j[0]["witness"]["factor"] == "Phi_2");
  CHECK(j[1]["passed"] == true);
  CHECK(j[1]["witness"].is_null());
  CHECK(j[1]["modulus"]["n"] == 7);
  CHECK(j[1]["modulus"]["e"] == 3);
  CHECK(j[1]["params"]["d"] == "3");
  CHECK(j[1]["elapsed_ms"] == 0);
  CHECK(j[1]["engine_version"] == engine_version());
  for (const char* key : {"case_id", "theorem", "params", "modulus", "passed", "witness", "elapsed_ms", "engine_version"})
    CHECK(j[1].contains(key));
}

TEST_CASE("gcd obstruction record") {
  FactoredModulus m;
  m.factors = {{cyclotomic(3), 1}};
  m.expanded = cyclotomic(3);
  Verdict v = congruent(RationalFunction(1) / RationalFunction(LaurentPolynomial::q(3) - LaurentPolynomial(1)),
                        RationalFunction(0), m);
  Json j = Json::parse(render_report({v}, Format::json));
  CHECK(j[0]["passed"] == false);
  CHECK(j[0]["witness"]["kind"] == "gcd_obstruction");
  CHECK(j[0]["witness"]["factor_degree"] == 2);
}

TEST_CASE("csv quoting") {
  Verdict v = make_verdict("custom", {{"a", "x,y"}, {"b", "say \"hi\""}});
  const std::string csv = render_report({v}, Format::csv);
  CHECK(csv.find(",\"a=x,y;b=say \"\"hi\"\"\",") != std::string::npos);
  CHECK(count_lines(csv) == 2);
}

TEST_CASE("natural ordering") {
  CHECK(natural_less("n=4", "n=10"));
  CHECK_FALSE(natural_less("n=10", "n=4"));
  CHECK(natural_less("a/d=3/n=25", "a/d=4/n=5"));
  CHECK(natural_less("lem5", "lem6"));
  CHECK_FALSE(natural_less("x", "x"));
}

TEST_CASE("range enumeration filters inadmissible n") {
  auto cases = enumerate_cases(verify_config("thm1", "1..25", {3}));
  CHECK(cases.size() == 9);
  CHECK(enumerate_cases(verify_config("thm5", "6..8")).empty());
  RunConfig c = verify_config("thm5", "6..8");
  CHECK(run(c, std::cerr) == exit_no_cases);
}

TEST_CASE("explicit lists keep inadmissible entries as rejections") {
  auto v = run_all(verify_config("thm1", "7,8", {3}));
  REQUIRE(v.size() == 2);
  std::sort(v.begin(), v.end(), [](const Verdict& x, const Verdict& y) { return natural_less(x.case_id, y.case_id); });
  CHECK(v[0].passed());
  CHECK(v[1].status == Status::rejected);
  CHECK(exit_status(v) == exit_ok);
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(NSpec::parse("9..3"), ConfigError);
  CHECK_THROWS_AS(NSpec::parse("x"), ConfigError);
  CHECK_THROWS_AS(NSpec::parse(""), ConfigError);
  CHECK_THROWS_AS(enumerate_cases(verify_config("thm9", "5")), ConfigError);
  RunConfig no_n;
  no_n.theorems = {"thm1"};
  CHECK_THROWS_AS(enumerate_cases(no_n), ConfigError);
  RunConfig no_p;
  no_p.theorems = {"g2"};
  CHECK_THROWS_AS(enumerate_cases(no_p), ConfigError);
  RunConfig bad = verify_config("thm3", "5", {4});
  bad.c_samples = {"q^x"};
  CHECK_THROWS_AS(enumerate_cases(bad), ConfigError);
  RunConfig unknown;
  unknown.theorems = {"thm9"};
  CHECK(run(unknown, std::cerr) == exit_config);
  CHECK(split_list("2,3,7/2").size() == 3);
  CHECK(split_list("").empty());
  CHECK(parse_long_list("13, 17") == std::vector<long>{13, 17});
}

TEST_CASE("time budget marks unstarted cases skipped") {
  RunConfig c = verify_config("thm1", "1..40", {3});
  c.time_budget_sec = 0;
  auto v = run_all(c);
  REQUIRE_FALSE(v.empty());
  CHECK(std::all_of(v.begin(), v.end(), [](const Verdict& x) { return x.status == Status::skipped; }));
  CHECK(exit_status(v) == exit_failures);
}

TEST_CASE("exit status") {
  CHECK(exit_status({verify_thm1(3, 7)}) == exit_ok);
  CHECK(exit_status({verify_thm1(3, 7), verify_thm1(3, 4)}) == exit_failures);
  CHECK(exit_status({verify_thm5(6)}) == exit_ok);
}

TEST_CASE("reports are byte-stable across job counts") {
  RunConfig c;
  c.command = RunConfig::Command::sweep;
  c.theorems = {"thm1", "thm5", "liu-wang"};
  c.n = NSpec::parse("1..13");
  c.d_list = {3, 4};
  const std::string one = render_report(run_all(c, 1), Format::json);
  const std::string four = render_report(run_all(c, 4), Format::json);
  CHECK(one == four);
  CHECK(render_report(run_all(c, 3), Format::csv) == render_report(run_all(c, 1), Format::csv));
}

TEST_CASE("emit_report writes files and reports I/O errors") {
  const auto path = std::filesystem::temp_directory_path() / "qck_report_test.json";
  emit_report({verify_thm5(5)}, Format::json, path.string());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == render_report({verify_thm5(5)}, Format::json));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(emit_report({}, Format::json, "/nonexistent-dir/x/report.json"), std::runtime_error);
}
