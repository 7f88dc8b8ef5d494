#include "pfq_cli/json_io.hpp"

#include <fstream>

namespace pfq::cli {

namespace {

Rational entry_value(const Json& e, int i, int j) {
  const std::string where = " at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  if (e.is_string()) {
    try {
      return Rational::from_string(e.get<std::string>());
    } catch (const Error& ex) {
      throw ParseError(std::string(ex.what()) + where);
    }
  }
  if (e.is_number_integer()) return Rational(e.get<long>());
  throw ParseError("entry must be a rational string or an integer" + where);
}

}  // namespace

RSkew skew_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw ParseError("matrix JSON needs fields \"n\" and \"entries\"");
  if (!j["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
  const long n = j["n"].get<long>();
  if (n < 0 || n > 64) throw ParseError("\"n\" out of range");
  const Json& rows = j["entries"];
  if (!rows.is_array() || static_cast<long>(rows.size()) != n)
    throw ParseError("\"entries\" must hold n rows");
  RMatrix m(static_cast<int>(n), static_cast<int>(n), Rational(0));
  for (int i = 0; i < n; ++i) {
    const Json& row = rows[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<long>(row.size()) != n)
      throw ParseError("row " + std::to_string(i + 1) + " must hold n entries");
    for (int k = 0; k < n; ++k) m(i, k) = entry_value(row[static_cast<size_t>(k)], i, k);
  }
  return RSkew(std::move(m));
}

RSkew read_skew_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return skew_from_json(j);
}

Json matrix_to_json(const RMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
    rows.push_back(std::move(row));
  }
  Json j;
  j["n"] = m.rows();
  j["entries"] = std::move(rows);
  return j;
}

Json rationals_to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

Json report_to_json(const VerificationReport& r, bool timing) {
  Json j;
  j["trial"] = r.trial;
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = std::move(params);
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["equal"] = r.equal;
  j["cross_check"] = r.cross_check;
  j["passed"] = r.passed();
  j["skipped"] = r.skipped;
  j["resampled"] = r.resampled;
  j["detail"] = r.detail;
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace pfq::cli
