#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cnniep/centro.hpp"
#include "cnniep/errors.hpp"
#include "cnniep/spectral.hpp"

namespace cnniep {

namespace {

double inf_norm(const DenseMatrix& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (double x : m.row(i)) s += std::abs(x);
    best = std::max(best, s);
  }
  return best;
}

// v <- (v + Jv) / 2 with mirrored entries assigned the identical value.
void symmetrize_in_place(Vector& v) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    const double avg = 0.5 * (v[i] + v[n - 1 - i]);
    v[i] = avg;
    v[n - 1 - i] = avg;
  }
}

void normalize_in_place(Vector& v) {
  const double nrm = norm2(v);
  for (double& x : v) x /= nrm;
}

}  // namespace

PerronData perron_data(const DenseMatrix& q, const PowerIterationOptions& opts) {
  const std::size_t n = q.order();
  if (n == 0) throw DimensionMismatch("perron_data: empty matrix");
  const double scale = std::max(1.0, q.max_abs());
  if (!is_nonnegative(q, 1e-12 * scale).ok) {
    throw InvalidArgument("perron_data: matrix has negative entries");
  }
  const bool sym = opts.exchange_symmetric;
  if (sym) {
    const CentroCheck centro = is_centrosymmetric(q, 1e-12 * scale);
    if (!centro.ok) {
      throw NotCentrosymmetric("perron_data: matrix is not centrosymmetric", centro.residual);
    }
  }

  if (n == 1) return {q(0, 0), Vector{1.0}};

  const double bound = inf_norm(q);
  if (bound == 0.0) {
    return {0.0, Vector(n, 1.0 / std::sqrt(static_cast<double>(n)))};
  }
  const double shift = 0.5 * bound;
  const double tol = opts.tolerance * std::max(1.0, bound);

  Vector v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  for (std::size_t it = 0; it < opts.max_iterations; ++it) {
    const Vector qv = q * v;
    const double rho = dot(v, qv);
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) res += (qv[i] - rho * v[i]) * (qv[i] - rho * v[i]);
    if (std::sqrt(res) <= tol) {
      for (double& x : v) x = std::max(x, 0.0);
      if (sym) symmetrize_in_place(v);
      normalize_in_place(v);
      return {rho, std::move(v)};
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = qv[i] + shift * v[i];
    if (sym) symmetrize_in_place(v);
    normalize_in_place(v);
  }
  throw NonConvergence("perron_data: power iteration did not converge in " +
                       std::to_string(opts.max_iterations) + " iterations");
}

NormalityCheck is_normal(const DenseMatrix& m, double tol) {
  const DenseMatrix mt = m.transpose();
  const DenseMatrix comm = m * mt - mt * m;
  const double f = m.frobenius_norm();
  const double r = comm.frobenius_norm() / (1.0 + f * f);
  return {r <= tol, r};
}

NonnegativityCheck is_nonnegative(const DenseMatrix& m, double tol) {
  double lowest = 0.0;
  for (double x : m.entries()) lowest = std::min(lowest, x);
  return {lowest >= -tol, lowest};
}

VerificationReport verify_realization(const DenseMatrix& q, std::span<const Complex> target,
                                      const VerificationTolerances& tol) {
  VerificationReport rep;
  if (!q.is_square() || q.rows() == 0) {
    rep.note = "matrix is not square";
    rep.centro_residual = rep.normality_residual = rep.spectrum_max_mismatch =
        std::numeric_limits<double>::infinity();
    return rep;
  }
  const CentroCheck c = is_centrosymmetric(q, tol.centro);
  rep.centro_residual = c.residual;
  rep.centro_ok = c.ok;

  const NonnegativityCheck nn = is_nonnegative(q, tol.nonneg);
  rep.nonneg_margin = nn.most_negative;
  rep.nonneg_ok = nn.ok;

  const NormalityCheck nc = is_normal(q, tol.normality);
  rep.normality_residual = nc.residual;
  rep.normal_ok = nc.ok;

  if (target.size() != q.rows()) {
    rep.spectrum_max_mismatch = std::numeric_limits<double>::infinity();
    rep.note = "target has " + std::to_string(target.size()) + " values for a matrix of order " +
               std::to_string(q.rows());
  } else {
    try {
      const auto eig = eigenvalues(q);
      const SpectrumMatch sm = match_spectra(eig, target, tol.spectrum);
      rep.spectrum_max_mismatch = sm.max_distance;
      rep.spectrum_ok = sm.ok;
    } catch (const Error& e) {
      rep.spectrum_max_mismatch = std::numeric_limits<double>::infinity();
      rep.note = e.what();
    }
  }
  rep.pass = rep.centro_ok && rep.nonneg_ok && rep.normal_ok && rep.spectrum_ok;
  return rep;
}

VerificationReport verify_realization(const DenseMatrix& q, const Spectrum& target,
                                      const VerificationTolerances& tol) {
  const auto values = target.values();
  return verify_realization(q, values, tol);
}

}  // namespace cnniep
