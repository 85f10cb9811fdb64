#pragma once

#include <string>
#include <vector>

#include "cnniep/dense_matrix.hpp"
#include "cnniep/spectrum.hpp"

namespace cnniep {

inline constexpr std::size_t kMaxEigenOrder = 512;

/// All n eigenvalues of a real square matrix: Householder reduction to upper
/// Hessenberg form, then implicitly double-shifted QR with 1x1 / 2x2
/// deflation. Conjugate pairs come out exactly conjugate. Orders <= 2 use the
/// closed forms. Throws NonConvergence when an eigenvalue needs more than the
/// per-eigenvalue iteration cap.
std::vector<Complex> eigenvalues(const DenseMatrix& m);

/// Perron root and a unit, nonnegative, exchange-symmetric eigenvector.
struct PerronData {
  double root = 0.0;
  Vector vector;
};

struct PowerIterationOptions {
  std::size_t max_iterations = 20000;
  double tolerance = 1e-12;
  /// When false the matrix need not be centrosymmetric and the iterate is
  /// not projected; the result is then only a unit nonnegative eigenvector.
  bool exchange_symmetric = true;
};

/// Shifted power iteration on Q + cI (c > 0 keeps the Perron root strictly
/// dominant even when -root is also an eigenvalue), projecting each iterate
/// onto the exchange-symmetric subspace with v <- (v + Jv) / 2. Throws
/// NonConvergence if the residual does not reach the tolerance.
PerronData perron_data(const DenseMatrix& q, const PowerIterationOptions& opts = {});

struct NormalityCheck {
  bool ok = false;
  double residual = 0.0;  // ||M M^T - M^T M||_F / (1 + ||M||_F^2)
};
NormalityCheck is_normal(const DenseMatrix& m, double tol = 1e-9);

struct NonnegativityCheck {
  bool ok = false;
  double most_negative = 0.0;  // min(0, smallest entry)
};
NonnegativityCheck is_nonnegative(const DenseMatrix& m, double tol = 1e-12);

struct VerificationTolerances {
  double centro = 1e-12;
  double nonneg = 1e-12;
  double normality = 1e-9;
  double spectrum = 1e-8;

  VerificationTolerances scaled(double factor) const {
    return {centro * factor, nonneg * factor, normality * factor, spectrum * factor};
  }
};

struct VerificationReport {
  double centro_residual = 0.0;
  double nonneg_margin = 0.0;
  double normality_residual = 0.0;
  double spectrum_max_mismatch = 0.0;
  bool centro_ok = false;
  bool nonneg_ok = false;
  bool normal_ok = false;
  bool spectrum_ok = false;
  bool pass = false;
  /// Set when the check itself could not run (e.g. eigensolver failure).
  std::string note;
};

/// Runs the four checks every realization must satisfy. Never throws for
/// numeric failures; they are reported. Cardinality mismatch is reported as
/// an infinite spectrum mismatch.
VerificationReport verify_realization(const DenseMatrix& q, std::span<const Complex> target,
                                      const VerificationTolerances& tol = {});
VerificationReport verify_realization(const DenseMatrix& q, const Spectrum& target,
                                      const VerificationTolerances& tol = {});

}  // namespace cnniep
