#include "qck/report.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#ifndef QCK_VERSION
#define QCK_VERSION "0.0.0"
#endif

namespace qck {

namespace {

using Json = nlohmann::ordered_json;

template <class T>
Json or_null(const std::optional<T>& x) {
  return x ? Json(*x) : Json(nullptr);
}

Json to_json(const Verdict& v) {
  Json params = Json::object();
  for (const auto& [k, val] : v.params) params[k] = val;
  Json modulus = nullptr;
  if (v.modulus) modulus = {{"n", v.modulus->n}, {"e", v.modulus->e}, {"degree", v.modulus->degree}};
  Json witness = nullptr;
  if (v.witness) {
    const Witness& w = *v.witness;
    witness = {{"kind", w.kind},
               {"factor", or_null(w.factor)},
               {"factor_degree", or_null(w.factor_degree)},
               {"remainder_degree", or_null(w.remainder_degree)},
               {"required_multiplicity", or_null(w.required_multiplicity)},
               {"found_multiplicity", or_null(w.found_multiplicity)},
               {"detail", w.detail}};
  }
  return {{"case_id", v.case_id},   {"theorem", v.theorem}, {"params", params},
          {"modulus", modulus},     {"passed", v.passed()}, {"status", to_string(v.status)},
          {"witness", witness},     {"elapsed_ms", v.elapsed_ms}, {"engine_version", engine_version()}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

template <class T>
std::string opt(const std::optional<T>& x) {
  if (!x) return "";
  if constexpr (std::is_same_v<T, std::string>)
    return *x;
  else
    return std::to_string(*x);
}

std::string format_ms(double ms) {
  std::ostringstream os;
  os << ms;
  return os.str();
}

}  // namespace

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  auto digit = [](char ch) { return ch >= '0' && ch <= '9'; };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && digit(a[ie])) ++ie;
      while (je < b.size() && digit(b[je])) ++je;
      // Compare digit runs by value: strip leading zeros, then length.
      std::size_t is = i, js = j;
      while (is + 1 < ie && a[is] == '0') ++is;
      while (js + 1 < je && b[js] == '0') ++js;
      if (ie - is != je - js) return ie - is < je - js;
      const int c = a.compare(is, ie - is, b, js, je - js);
      if (c != 0) return c < 0;
      if (ie - i != je - j) return ie - i < je - j;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

std::string engine_version() { return QCK_VERSION; }

std::string render_report(std::vector<Verdict> verdicts, Format format) {
  std::stable_sort(verdicts.begin(), verdicts.end(),
                   [](const Verdict& a, const Verdict& b) { return natural_less(a.case_id, b.case_id); });
  if (format == Format::json) {
    Json arr = Json::array();
    for (const auto& v : verdicts) arr.push_back(to_json(v));
    return arr.dump(2) + "\n";
  }
  std::string out =
      "case_id,theorem,params,modulus_n,modulus_e,modulus_degree,passed,status,witness_kind,"
      "witness_factor,witness_factor_degree,witness_remainder_degree,witness_required_multiplicity,"
      "witness_found_multiplicity,witness_detail,elapsed_ms,engine_version\n";
  for (const auto& v : verdicts) {
    std::string params;
    for (const auto& [k, val] : v.params) params += (params.empty() ? "" : ";") + k + "=" + val;
    std::vector<std::string> row{v.case_id, v.theorem, params};
    if (v.modulus) {
      row.push_back(std::to_string(v.modulus->n));
      row.push_back(std::to_string(v.modulus->e));
      row.push_back(std::to_string(v.modulus->degree));
    } else {
      row.insert(row.end(), 3, "");
    }
    row.push_back(v.passed() ? "true" : "false");
    row.push_back(to_string(v.status));
    if (v.witness) {
      const Witness& w = *v.witness;
      for (std::string s : {w.kind, opt(w.factor), opt(w.factor_degree), opt(w.remainder_degree),
                            opt(w.required_multiplicity), opt(w.found_multiplicity), w.detail})
        row.push_back(std::move(s));
    } else {
      row.insert(row.end(), 7, "");
    }
    row.push_back(format_ms(v.elapsed_ms));
    row.push_back(engine_version());
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_field(row[i]);
    out += "\n";
  }
  return out;
}

void emit_report(const std::vector<Verdict>& verdicts, Format format, const std::string& path) {
  const std::string text = render_report(verdicts, format);
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    if (!std::cout) throw std::runtime_error("cannot write report to stdout");
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
  f.close();
  if (!f) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace qck
