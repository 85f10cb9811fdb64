// cnniep: check, realize and verify normal centrosymmetric nonnegative
// realizations of self-conjugate spectra.
//
// Exit codes: 0 success, 1 no applicable condition / failed check,
// 2 input error, 3 realization failed verification.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cnniep/io.hpp"
#include "cnniep/planner.hpp"

namespace {

using cnniep::io::Json;

constexpr int kOk = 0;
constexpr int kNotFound = 1;
constexpr int kInputError = 2;
constexpr int kVerificationFailed = 3;

cnniep::Spectrum load_spectrum(const std::string& path) {
  const auto values = cnniep::io::spectrum_from_json(cnniep::io::read_json(path));
  return cnniep::Spectrum::normalize(values);
}

int cmd_check(const std::string& spectrum_path) {
  cnniep::Spectrum s;
  try {
    s = load_spectrum(spectrum_path);
  } catch (const cnniep::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  const cnniep::ConditionReport report = cnniep::condition_report(s);
  std::cout << cnniep::io::condition_report_to_json(s, report).dump(2) << '\n';
  return report.any_applicable() || report.trivially_realizable ? kOk : kNotFound;
}

int cmd_realize(const std::string& spectrum_path, const std::string& out_path,
                const std::string& construction, double tol, bool no_verify) {
  cnniep::Spectrum s;
  try {
    s = load_spectrum(spectrum_path);
  } catch (const cnniep::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  cnniep::PlanOptions opts;
  opts.preference = construction;
  opts.tolerances = cnniep::VerificationTolerances{}.scaled(tol);
  opts.verify = !no_verify;
  try {
    const cnniep::PlanResult result = cnniep::plan_and_realize(s, opts);
    cnniep::io::write_json(out_path, cnniep::io::plan_result_to_json(result));
    return kOk;
  } catch (const cnniep::NoSufficientCondition& e) {
    std::cerr << "no realization: " << e.what() << '\n';
    std::cout << cnniep::io::condition_report_to_json(s, e.report()).dump(2) << '\n';
    return kNotFound;
  } catch (const cnniep::VerificationFailed& e) {
    std::cerr << "verification failed; matrix and report written to " << out_path << '\n';
    try {
      cnniep::io::write_json(out_path, cnniep::io::plan_result_to_json(e.result()));
    } catch (const cnniep::Error& w) {
      std::cerr << "error: " << w.what() << '\n';
    }
    return kVerificationFailed;
  } catch (const cnniep::io::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const cnniep::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const cnniep::Error& e) {
    std::cerr << "construction failed: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

int cmd_verify(const std::string& matrix_path, const std::string& spectrum_path, double tol) {
  cnniep::DenseMatrix m;
  std::vector<cnniep::Complex> values;
  try {
    m = cnniep::io::matrix_from_json(cnniep::io::read_json(matrix_path));
    values = cnniep::io::spectrum_from_json(cnniep::io::read_json(spectrum_path));
  } catch (const cnniep::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  if (values.size() != m.rows()) {
    std::cerr << "error: spectrum has " << values.size() << " values for a matrix of order "
              << m.rows() << '\n';
    return kInputError;
  }
  const auto report =
      cnniep::verify_realization(m, values, cnniep::VerificationTolerances{}.scaled(tol));
  std::cout << cnniep::io::verification_to_json(report).dump(2) << '\n';
  return report.pass ? kOk : kNotFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal centrosymmetric nonnegative realizations of self-conjugate spectra"};
  app.require_subcommand(1);

  std::string spectrum_path;
  std::string matrix_path;
  std::string out_path;
  std::string construction = "auto";
  double tol = 1.0;
  bool no_verify = false;

  auto* check = app.add_subcommand("check", "Report which sufficient conditions hold");
  check->add_option("--spectrum", spectrum_path, "Spectrum JSON file")->required();

  auto* realize = app.add_subcommand("realize", "Construct a realizing matrix");
  realize->add_option("--spectrum", spectrum_path, "Spectrum JSON file")->required();
  realize->add_option("--out", out_path, "Output matrix JSON file")->required();
  realize->add_option("--construction", construction, "auto or a construction name");
  realize->add_option("--tol", tol, "Scale factor for all verification tolerances")
      ->check(CLI::PositiveNumber);
  realize->add_flag("--no-verify", no_verify, "Skip verification");

  auto* verify = app.add_subcommand("verify", "Check a matrix against a spectrum");
  verify->add_option("--matrix", matrix_path, "Matrix JSON file")->required();
  verify->add_option("--spectrum", spectrum_path, "Spectrum JSON file")->required();
  verify->add_option("--tol", tol, "Scale factor for all verification tolerances")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  if (*check) return cmd_check(spectrum_path);
  if (*realize) return cmd_realize(spectrum_path, out_path, construction, tol, no_verify);
  return cmd_verify(matrix_path, spectrum_path, tol);
}
