#include "dlattice/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace dlat::json {

namespace {

[[noreturn]] void format_error(const std::string& what) { throw Error(ErrorKind::Format, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) format_error("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) format_error(std::string("missing field '") + key + "'");
  return *it;
}

int as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) format_error(what + " must be an integer");
  return j.get<int>();
}

ExtendedValue extended_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return ExtendedValue::infinity();
  return {rational_from_json(j)};
}

Json extended_to_json(const ExtendedValue& v) {
  if (v.is_infinite()) return "inf";
  return rational_to_json(v.value());
}

Json tuple_labels(const EffectAlgebra* alg, const std::vector<Element>& tuple) {
  Json out = Json::array();
  for (Element e : tuple) {
    if (alg && alg->valid(e))
      out.push_back(alg->label(e));
    else
      out.push_back(std::to_string(e));
  }
  return out;
}

}  // namespace

Json algebra_to_json(const EffectAlgebra& alg) {
  Json j;
  j["n"] = alg.size();
  j["zero"] = alg.zero();
  j["one"] = alg.one();
  j["labels"] = alg.labels();
  Json rows = Json::array();
  for (const auto& row : alg.sum_table()) {
    Json r = Json::array();
    for (Element e : row) {
      if (e == kAbsent)
        r.push_back(nullptr);
      else
        r.push_back(e);
    }
    rows.push_back(std::move(r));
  }
  j["sum"] = std::move(rows);
  return j;
}

AlgebraPtr algebra_from_json(const Json& j) {
  const int n = as_int(field(j, "n"), "'n'");
  if (n < 1) format_error("'n' must be positive");
  const int zero = as_int(field(j, "zero"), "'zero'");
  const int one = as_int(field(j, "one"), "'one'");
  std::vector<std::string> labels;
  if (auto it = j.find("labels"); it != j.end()) {
    if (!it->is_array()) format_error("'labels' must be an array of strings");
    for (const auto& l : *it) {
      if (!l.is_string()) format_error("'labels' must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  const Json& sum = field(j, "sum");
  if (!sum.is_array() || static_cast<int>(sum.size()) != n) format_error("'sum' must have n rows");
  SumTable table;
  for (const auto& row : sum) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) format_error("each 'sum' row must have n entries");
    std::vector<Element> r;
    for (const auto& e : row) r.push_back(e.is_null() ? kAbsent : as_int(e, "sum entries"));
    table.push_back(std::move(r));
  }
  return EffectAlgebra::build(table, zero, one, std::move(labels));
}

Json rational_to_json(const Rational& q) {
  if (denominator(q) == 1 && abs(numerator(q)) < (boost::multiprecision::cpp_int(1) << 53))
    return numerator(q).convert_to<long long>();
  return format_rational(q);
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Rational(j.get<unsigned long long>()) : Rational(j.get<long long>());
  if (j.is_number_float()) {
    const double x = j.get<double>();
    if (std::trunc(x) != x || std::abs(x) > 9.0e15)
      format_error("non-integer numbers must be written as strings such as \"1/3\"");
    return Rational(static_cast<long long>(x));
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  format_error("expected a rational number");
}

Json submeasure_to_json(const KSubmeasure& eta) {
  Json j;
  Json values = Json::array();
  for (const auto& v : eta.values) values.push_back(extended_to_json(v));
  j["values"] = std::move(values);
  j["k"] = rational_to_json(eta.k);
  return j;
}

KSubmeasure submeasure_from_json(const AlgebraPtr& alg, const Json& j) {
  const Json& values = field(j, "values");
  if (!values.is_array()) format_error("'values' must be an array");
  KSubmeasure eta{alg, {}, 1};
  for (const auto& v : values) eta.values.push_back(extended_from_json(v));
  if (auto it = j.find("k"); it != j.end()) eta.k = rational_from_json(*it);
  if (static_cast<int>(eta.values.size()) != alg->size())
    format_error("'values' must have one entry per element");
  return eta;
}

Json measure_to_json(const ModularMeasure& mu) {
  Json j;
  j["dim"] = mu.dim;
  Json rows = Json::array();
  for (const auto& v : mu.mu) {
    Json r = Json::array();
    for (const auto& x : v) r.push_back(rational_to_json(x));
    rows.push_back(std::move(r));
  }
  j["mu"] = std::move(rows);
  j["norm"] = mu.norm == NormKind::Max ? "max" : "sum";
  return j;
}

ModularMeasure measure_from_json(const AlgebraPtr& alg, const Json& j) {
  ModularMeasure mu{alg, as_int(field(j, "dim"), "'dim'"), {}, NormKind::Max};
  if (mu.dim < 1) format_error("'dim' must be positive");
  const Json& rows = field(j, "mu");
  if (!rows.is_array() || static_cast<int>(rows.size()) != alg->size())
    format_error("'mu' must have one entry per element");
  for (const auto& row : rows) {
    std::vector<Rational> v;
    // A bare number is accepted for one-dimensional measures.
    if (row.is_array()) {
      for (const auto& x : row) v.push_back(rational_from_json(x));
    } else {
      v.push_back(rational_from_json(row));
    }
    if (static_cast<int>(v.size()) != mu.dim) format_error("every 'mu' entry must have 'dim' coordinates");
    mu.mu.push_back(std::move(v));
  }
  if (auto it = j.find("norm"); it != j.end()) {
    const std::string norm = it->is_string() ? it->get<std::string>() : "";
    if (norm == "max")
      mu.norm = NormKind::Max;
    else if (norm == "sum")
      mu.norm = NormKind::Sum;
    else
      format_error("'norm' must be \"max\" or \"sum\"");
  }
  return mu;
}

Json report_to_json(const Report& report, bool with_timings) {
  Json j;
  j["subject"] = report.subject();
  const EffectAlgebra* alg = report.algebra().get();
  if (alg) {
    const Classification c = classify(*alg);
    j["algebra"] = {{"n", alg->size()}, {"is_mv", c.is_mv}, {"is_oml", c.is_oml}};
  }
  j["passed"] = report.passed();
  j["failures"] = report.failures();
  Json counts = Json::object();
  for (const auto& [name, value] : report.counts()) counts[name] = value;
  j["counts"] = std::move(counts);
  Json checks = Json::array();
  for (const auto& c : report.checks()) {
    Json e;
    e["name"] = c.name;
    e["status"] = to_string(c.status);
    if (c.cases) e["cases"] = c.cases;
    if (c.witness) {
      e["witness"] = {{"condition", c.witness->condition},
                      {"tuple", c.witness->tuple},
                      {"labels", tuple_labels(alg, c.witness->tuple)}};
    }
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  if (with_timings) {
    Json t = Json::object();
    for (const auto& [name, seconds] : report.timings()) t[name] = seconds;
    j["timings"] = std::move(t);
  }
  if (!report.sections().empty()) {
    Json sections = Json::array();
    for (const auto& s : report.sections()) sections.push_back(report_to_json(s, with_timings));
    j["sections"] = std::move(sections);
  }
  return j;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    format_error(std::string("invalid JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) format_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace dlat::json
