#pragma once

// JSON documents used by the command-line tool.
//
// Spectrum file: [{"re": 20}, {"re": 3, "im": 4}, {"re": 3, "im": -4}, ...]
// Matrix file:   {"order": n, "rows": [[...], ...]} with optional "construction",
//                "trace" and "report" members on output.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "cnniep/planner.hpp"

namespace cnniep::io {

using Json = nlohmann::ordered_json;

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Reads and parses a whole file; ParseError on I/O or syntax errors.
Json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const Json& doc);

std::vector<Complex> spectrum_from_json(const Json& doc);
Json spectrum_to_json(std::span<const Complex> values);

/// Validates order and row shapes; every entry must be a finite number.
DenseMatrix matrix_from_json(const Json& doc);
Json matrix_to_json(const DenseMatrix& m);

Json trace_to_json(const RealizationTrace& trace);
Json verification_to_json(const VerificationReport& report);
Json condition_report_to_json(const Spectrum& s, const ConditionReport& report);

/// Matrix document with construction, trace and (when present) report.
Json plan_result_to_json(const PlanResult& result);

}  // namespace cnniep::io
