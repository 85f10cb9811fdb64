#pragma once

// Constructions of normal nonnegative matrices with prescribed spectra.
//
// Conventions shared by every realize_* function:
//   lambda0          the Perron root (>= 0)
//   reals            the remaining real eigenvalues, nonincreasing
//   pairs            one representative a + bi (b > 0) per conjugate pair
// Each result carries its declared spectrum, an exchange-symmetric Perron
// vector (for centrosymmetric results) and a trace of the leaf and
// combination steps that produced it. Hypotheses are checked up front and
// reported as ConditionFailed with the violated inequality and its margin.

#include <span>
#include <vector>

#include "cnniep/partition.hpp"
#include "cnniep/realization.hpp"

namespace cnniep {

/// Slack allowed on sufficient-condition margins.
inline constexpr double kMarginSlack = 1e-12;

// ---- 4 x 4 -------------------------------------------------------------

struct FourByFourMargins {
  double sum_margin = 0.0;   // lambda0 + lambda1 - 2|a|
  double diff_margin = 0.0;  // lambda0 - lambda1 - 2|b|
};

/// Both margins of the necessary and sufficient 4x4 condition.
FourByFourMargins check_4x4_necessary(double lambda0, double lambda1, Complex z);

/// Realizes {lambda0, lambda1, z, conj z}. Requires lambda0 >= |lambda1|
/// (lambda1 may be nonnegative) and both margins >= 0.
Realization realize_4x4(double lambda0, double lambda1, Complex z);

// ---- circulants ----------------------------------------------------------

/// First row c_0..c_{2s} of the (2s+1)-circulant with eigenvalues
/// lead, z_j, conj z_j: c_k = (lead + 2 sum_j (a_j cos(2 pi jk/N) + b_j sin(2 pi jk/N))) / N.
Vector circulant_row(double lead, std::span<const Complex> pairs);

/// C(i, j) = row[(j - i) mod N].
DenseMatrix circulant(std::span<const double> row);

/// lambda0 - |a| - sqrt(3)|b|. Nonnegative whenever lambda0 >= 2|z|, which
/// bounds the entries of the 3x3 circulant for {lambda0, z, conj z} below.
double sqrt3_margin(double lambda0, Complex z);

/// Nonnegative normal (2s+1)-circulant for {lambda0, z_j, conj z_j}.
/// Requires lambda0 - 2 sum |z_j| >= 0. Not centrosymmetric for s > 0.
Realization realize_circulant(double lambda0, std::span<const Complex> pairs);

struct CirculantCoefficients {
  std::size_t s = 0;
  Vector c;  // plus part, lead lambda0, pairs[0..s)
  Vector d;  // minus part, lead lambda1, pairs[s..2s)
};

/// Coefficient rows for realize_circulant_pair; needs an even, nonzero number of pairs.
CirculantCoefficients circulant_coefficients(double lambda0, double lambda1,
                                             std::span<const Complex> pairs);

/// Centrosymmetric realization of order 2(2s+1) of
/// {lambda0, lambda1} + 2s pairs, from A - JC = circ(d), A + JC = circ(c).
/// Requires lambda0 >= 0 > lambda1 (or lambda1 <= 0) and
/// lambda0 + lambda1 - 2 sum |z_j| >= 0.
Realization realize_circulant_pair(double lambda0, double lambda1, std::span<const Complex> pairs);

// ---- 8 x 8 ---------------------------------------------------------------

/// Realizes {lambda0, lambda1, z1, z2, z3} and conjugates as an 8x8 matrix.
/// Requires lambda0 + lambda1 - 2(|z1| + |z2| + |z3|) >= 0.
Realization realize_three_pairs_8x8(double lambda0, double lambda1, Complex z1, Complex z2,
                                    Complex z3);

// ---- combination steps ---------------------------------------------------

/// [[A, rho u v^T], [rho v u^T, B]] for Perron data (alpha0, u) of A and
/// (beta0, v) of B, alpha0 >= beta0, rho >= 0. alpha0 and beta0 are replaced
/// by the eigenvalues of [[alpha0, rho], [rho, beta0]].
Realization xu_combine(const Realization& a, const Realization& b, double rho);

struct CombineParams {
  double rho = 0.0;
  double xi = 0.0;
};

/// Order 2n + m: [[B, rho v u^T, xi v v^T], [rho u v^T, A, rho u v^T],
/// [xi v v^T, rho v u^T, B]] for centrosymmetric A (order m, Perron alpha1, u)
/// and B (order n, Perron beta1, v); rho, xi >= 0. alpha1, beta1, beta1 are
/// replaced by the eigenvalues of [[beta1, rho, xi], [rho, alpha1, rho], [xi, rho, beta1]].
Realization centro_combine(const Realization& a, const Realization& b, CombineParams params);

/// centro_combine with rho = sqrt(-(alpha1 - beta1 - a)(a + b) / 2), xi = -b,
/// for alpha1 >= beta1, alpha1 - beta1 >= a >= b and a + b <= 0.
/// Replaces alpha1, beta1, beta1 by alpha1 - (a + b), beta1 + a, beta1 + b.
Realization append_two_reals(const Realization& a, const Realization& b, double a_shift,
                             double b_shift);

/// Borders an even-order centrosymmetric realization with a zero centre:
/// xu_combine with B = [0] followed by moving the new index to the centre.
/// The Perron root alpha0 and 0 become the eigenvalues of [[alpha0, rho], [rho, 0]].
Realization border_center(const Realization& even, double rho);

// ---- recursive constructions ---------------------------------------------

/// One pair: {lambda0, lambda_1..lambda_n, z}, negative reals, n >= 1,
/// lambda0 + sum lambda_j - 2|z| >= 0.
Realization realize_one_pair(double lambda0, std::span<const double> reals, Complex z);

/// Even number of pairs with at least one negative real:
/// lambda0 + sum lambda_j - 2 sum |z_j| >= 0.
Realization realize_even_pairs(double lambda0, std::span<const double> reals,
                               std::span<const Complex> pairs);

/// Exactly three pairs, at least one negative real.
Realization realize_three_pairs(double lambda0, std::span<const double> reals,
                                std::span<const Complex> pairs);

/// Exactly three negative reals and any number m >= 1 of pairs.
Realization realize_four_reals(double lambda0, std::span<const double> reals,
                               std::span<const Complex> pairs);

/// At least three negative reals and any number m >= 1 of pairs.
Realization realize_general(double lambda0, std::span<const double> reals,
                            std::span<const Complex> pairs);

// ---- low-rank perturbation and partitions --------------------------------

/// A + X (B - Omega) X^T, where the columns of X are orthonormal eigenvectors
/// of the normal matrix A with A X = X Omega, B is normal with diag(B) = omega.
DenseMatrix rank_r_perturb(const DenseMatrix& a, const DenseMatrix& x,
                           std::span<const double> omega, const DenseMatrix& b);

/// Builds the realization described by a plain-mode `spec` from one
/// centrosymmetric realizer per block (realizers[j] realizes spec.gamma(j)).
/// Blocks are nested around the centre, the odd one (at most one) innermost.
Realization realize_partitioned(const PartitionSpec& spec, std::span<const Realization> realizers);

/// Mixed mode: realizers of the mirrored blocks may be any normal
/// nonnegative matrices; they are placed at both ends, with the nested
/// centrosymmetric blocks in the middle.
Realization realize_partitioned_mixed(const PartitionSpec& spec,
                                      std::span<const Realization> realizers);

}  // namespace cnniep
