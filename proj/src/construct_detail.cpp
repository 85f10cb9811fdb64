#include "construct_detail.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cnniep/centro.hpp"
#include "cnniep/constructors.hpp"
#include "cnniep/errors.hpp"

namespace cnniep::detail {

double margin_slack(double lambda0) { return kMarginSlack * std::max(1.0, std::abs(lambda0)); }

void require_margin(const std::string& inequality, double margin, double slack) {
  if (!(margin >= -slack)) throw ConditionFailed(inequality, margin);
}

void require_valid_pairs(std::span<const Complex> pairs) {
  for (const Complex& z : pairs) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw InvalidArgument("pair representative is not finite");
    }
    if (!(z.imag() > 0.0)) {
      throw InvalidArgument("pair representative must have positive imaginary part");
    }
  }
}

void require_standard_hypotheses(double lambda0, std::span<const double> reals,
                                 std::span<const Complex> pairs, std::size_t min_reals) {
  if (!std::isfinite(lambda0)) throw InvalidArgument("lambda0 is not finite");
  require_valid_pairs(pairs);
  if (reals.size() < min_reals) {
    throw InvalidArgument("need at least " + std::to_string(min_reals) + " negative reals, got " +
                          std::to_string(reals.size()));
  }
  require_margin("lambda0 >= 0", lambda0, 0.0);
  for (std::size_t i = 0; i < reals.size(); ++i) {
    if (!std::isfinite(reals[i])) throw InvalidArgument("real eigenvalue is not finite");
    if (i > 0 && reals[i] > reals[i - 1]) {
      throw InvalidArgument("real eigenvalues must be nonincreasing");
    }
    if (!(reals[i] < 0.0)) throw ConditionFailed("lambda_j < 0", -reals[i]);
  }
  double margin = lambda0;
  for (double r : reals) margin += r;
  margin -= 2.0 * sum_of_moduli(pairs);
  require_margin("lambda0 + sum(lambda_j) - 2 sum|z_j| >= 0", margin, margin_slack(lambda0));
}

std::vector<Complex> flat_spectrum(double lambda0, std::span<const double> reals,
                                   std::span<const Complex> pairs) {
  std::vector<Complex> out;
  out.reserve(1 + reals.size() + 2 * pairs.size());
  out.emplace_back(lambda0, 0.0);
  for (double r : reals) out.emplace_back(r, 0.0);
  for (const Complex& z : pairs) {
    out.push_back(z);
    out.push_back(std::conj(z));
  }
  return out;
}

void remove_one(std::vector<Complex>& values, Complex value) {
  if (values.empty()) throw InternalCheck("remove_one: empty spectrum");
  auto best = values.begin();
  for (auto it = values.begin(); it != values.end(); ++it)
    if (std::abs(*it - value) < std::abs(*best - value)) best = it;
  if (std::abs(*best - value) > 1e-8 * std::max(1.0, std::abs(value))) {
    throw InternalCheck("remove_one: value not present in declared spectrum");
  }
  values.erase(best);
}

Symmetric2x2 symmetric_2x2(double p, double r, double q) {
  const double mean = 0.5 * (p + q);
  const double half_diff = 0.5 * (p - q);
  const double radius = std::hypot(half_diff, r);
  Symmetric2x2 out;
  out.larger = mean + radius;
  // Product of the roots is pq - r^2; avoids cancellation in mean - radius.
  out.smaller = out.larger != 0.0 ? (p * q - r * r) / out.larger : mean - radius;
  if (r == 0.0) {
    out.v0 = p >= q ? 1.0 : 0.0;
    out.v1 = p >= q ? 0.0 : 1.0;
    return out;
  }
  // (larger - q, r) and (r, larger - p) are both eigenvectors with
  // nonnegative entries; pick the one without cancellation.
  const double e0 = half_diff >= 0.0 ? radius + half_diff : r;
  const double e1 = half_diff >= 0.0 ? r : radius - half_diff;
  const double nrm = std::hypot(e0, e1);
  out.v0 = e0 / nrm;
  out.v1 = e1 / nrm;
  return out;
}

void require_combinable(const Realization& r, bool centro, const char* who) {
  const std::string name(who);
  const DenseMatrix& m = r.matrix;
  if (!m.is_square() || m.rows() == 0) throw InvalidArgument(name + ": matrix must be square");
  const std::size_t n = m.rows();
  const double scale = std::max(1.0, m.max_abs());
  if (!is_nonnegative(m, 1e-12 * scale).ok) {
    throw InvalidArgument(name + ": matrix has negative entries");
  }
  if (!is_normal(m).ok) throw InvalidArgument(name + ": matrix is not normal");
  const Vector& u = r.perron.vector;
  if (u.size() != n) throw InvalidArgument(name + ": Perron vector has the wrong length");
  if (std::abs(norm2(u) - 1.0) > 1e-10) throw InvalidArgument(name + ": Perron vector is not unit");
  for (double x : u) {
    if (x < 0.0) throw InvalidArgument(name + ": Perron vector has a negative entry");
  }
  const Vector mu = m * u;
  double res = 0.0;
  for (std::size_t i = 0; i < n; ++i) res = std::max(res, std::abs(mu[i] - r.perron.root * u[i]));
  if (res > 1e-8 * scale * static_cast<double>(n)) {
    throw InvalidArgument(name + ": Perron vector is not an eigenvector for the recorded root");
  }
  if (centro) {
    const CentroCheck c = is_centrosymmetric(m, 1e-12 * scale);
    if (!c.ok) throw NotCentrosymmetric(name + ": matrix is not centrosymmetric", c.residual);
    if (!is_exchange_symmetric(u)) {
      throw InvalidArgument(name + ": Perron vector is not exchange-symmetric");
    }
  }
}

DenseMatrix finalize_centro(const DenseMatrix& m, const char* who) {
  const double scale = std::max(1.0, m.max_abs());
  const CentroCheck c = is_centrosymmetric(m, 1e-10 * scale);
  if (!c.ok) {
    throw InternalCheck(std::string(who) + ": result is not centrosymmetric (residual " +
                        std::to_string(c.residual) + ")");
  }
  return centro_symmetrize(m);
}

TraceStep make_step(std::string operation, Params params, const Realization& r) {
  return TraceStep{std::move(operation), std::move(params), r.matrix.rows(), r.spectrum};
}

void append_traces(RealizationTrace& out, const RealizationTrace& part) {
  out.insert(out.end(), part.begin(), part.end());
}

Vector uniform_vector(std::size_t n) {
  return Vector(n, 1.0 / std::sqrt(static_cast<double>(n)));
}

}  // namespace cnniep::detail
