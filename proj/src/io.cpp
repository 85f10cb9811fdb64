#include "cnniep/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace cnniep::io {

namespace {

double finite_number(const Json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ParseError(where + " must be finite");
  return x;
}

Json complex_to_json(Complex z) {
  Json j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

}  // namespace

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << doc.dump(2) << '\n';
  if (!out) throw ParseError("write failed for " + path.string());
}

std::vector<Complex> spectrum_from_json(const Json& doc) {
  if (!doc.is_array()) throw ParseError("spectrum must be a JSON array");
  if (doc.empty()) throw ParseError("spectrum is empty");
  std::vector<Complex> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const Json& item = doc[i];
    const std::string where = "spectrum[" + std::to_string(i) + "]";
    if (!item.is_object() || !item.contains("re")) {
      throw ParseError(where + " must be an object with \"re\"");
    }
    const double re = finite_number(item["re"], where + ".re");
    const double im = item.contains("im") ? finite_number(item["im"], where + ".im") : 0.0;
    out.emplace_back(re, im);
  }
  return out;
}

Json spectrum_to_json(std::span<const Complex> values) {
  Json arr = Json::array();
  for (const Complex& z : values) arr.push_back(complex_to_json(z));
  return arr;
}

DenseMatrix matrix_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("matrix document must be an object");
  if (!doc.contains("order") || !doc["order"].is_number_integer() || doc["order"].get<long long>() <= 0) {
    throw ParseError("\"order\" must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(doc["order"].get<long long>());
  if (!doc.contains("rows") || !doc["rows"].is_array() || doc["rows"].size() != n) {
    throw ParseError("\"rows\" must be an array of " + std::to_string(n) + " rows");
  }
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = doc["rows"][i];
    if (!row.is_array() || row.size() != n) {
      throw ParseError("row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    }
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = finite_number(row[j], "rows[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
  }
  return m;
}

Json matrix_to_json(const DenseMatrix& m) {
  Json doc;
  doc["order"] = m.rows();
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (double x : m.row(i)) row.push_back(x);
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

Json trace_to_json(const RealizationTrace& trace) {
  Json arr = Json::array();
  for (const TraceStep& step : trace) {
    Json s;
    s["operation"] = step.operation;
    Json params = Json::object();
    for (const auto& [name, value] : step.params) params[name] = value;
    s["params"] = std::move(params);
    s["order"] = step.order;
    s["spectrum"] = spectrum_to_json(step.spectrum);
    arr.push_back(std::move(s));
  }
  return arr;
}

Json verification_to_json(const VerificationReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["centrosymmetry_residual"] = r.centro_residual;
  j["nonnegativity_margin"] = r.nonneg_margin;
  j["normality_residual"] = r.normality_residual;
  j["spectrum_max_mismatch"] = r.spectrum_max_mismatch;
  j["centrosymmetric"] = r.centro_ok;
  j["nonnegative"] = r.nonneg_ok;
  j["normal"] = r.normal_ok;
  j["spectrum_match"] = r.spectrum_ok;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json condition_report_to_json(const Spectrum& s, const ConditionReport& report) {
  Json j;
  Json spec;
  spec["perron"] = s.perron;
  spec["reals"] = s.reals;
  spec["pairs"] = spectrum_to_json(s.pairs);
  j["spectrum"] = std::move(spec);
  j["real_count"] = report.real_count;
  j["pair_count"] = report.pair_count;
  j["zero_count"] = report.zero_count;
  j["padded_zeros"] = report.padded_zeros;
  j["trivially_realizable"] = report.trivially_realizable;
  Json entries = Json::array();
  for (const ConditionEntry& e : report.entries) {
    Json x;
    x["name"] = e.name;
    x["applicable"] = e.applicable;
    x["margin"] = e.margin ? Json(*e.margin) : Json(nullptr);
    x["reason"] = e.reason;
    entries.push_back(std::move(x));
  }
  j["conditions"] = std::move(entries);
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

Json plan_result_to_json(const PlanResult& result) {
  Json doc = matrix_to_json(result.realization.matrix);
  doc["construction"] = result.construction;
  doc["trace"] = trace_to_json(result.realization.trace);
  if (result.report) doc["report"] = verification_to_json(*result.report);
  return doc;
}

}  // namespace cnniep::io
