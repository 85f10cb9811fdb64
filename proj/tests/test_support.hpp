#pragma once

// Oracles and generators shared by the test binaries. The eigenvalue oracle
// is Eigen's EigenSolver and the multiset comparison is an exact bottleneck
// matching, both independent of the library's own solver and matcher.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "cnniep/dense_matrix.hpp"
#include "cnniep/spectrum.hpp"

namespace testing_support {

using cnniep::Complex;
using cnniep::DenseMatrix;

inline std::vector<Complex> oracle_eigenvalues(const DenseMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXd e(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) e(i, j) = m(i, j);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(e, false);
  std::vector<Complex> out;
  for (Eigen::Index i = 0; i < n; ++i) out.push_back(solver.eigenvalues()(i));
  return out;
}

namespace detail {

inline bool augment(std::size_t u, const std::vector<std::vector<bool>>& ok,
                    std::vector<int>& match_b, std::vector<bool>& seen) {
  for (std::size_t v = 0; v < ok[u].size(); ++v) {
    if (!ok[u][v] || seen[v]) continue;
    seen[v] = true;
    if (match_b[v] < 0 || augment(static_cast<std::size_t>(match_b[v]), ok, match_b, seen)) {
      match_b[v] = static_cast<int>(u);
      return true;
    }
  }
  return false;
}

inline bool perfect_matching_within(const std::vector<Complex>& a, const std::vector<Complex>& b,
                                    double t) {
  const std::size_t n = a.size();
  std::vector<std::vector<bool>> ok(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ok[i][j] = std::abs(a[i] - b[j]) <= t;
  std::vector<int> match_b(n, -1);
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<bool> seen(n, false);
    if (!augment(u, ok, match_b, seen)) return false;
  }
  return true;
}

}  // namespace detail

/// Smallest t such that a and b can be matched one-to-one with every
/// matched pair within t. Infinity when the sizes differ.
inline double multiset_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<double> cand;
  for (const Complex& x : a)
    for (const Complex& y : b) cand.push_back(std::abs(x - y));
  if (cand.empty()) return 0.0;
  std::sort(cand.begin(), cand.end());
  std::size_t lo = 0, hi = cand.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (detail::perfect_matching_within(a, b, cand[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return cand[lo];
}

inline double centro_residual(const DenseMatrix& m) {
  const std::size_t n = m.rows();
  double r = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r = std::max(r, std::abs(m(i, j) - m(n - 1 - i, n - 1 - j)));
  return r;
}

inline double min_entry(const DenseMatrix& m) {
  double r = std::numeric_limits<double>::infinity();
  for (double x : m.entries()) r = std::min(r, x);
  return r;
}

/// ||M M^T - M^T M||_F / (1 + ||M||_F^2), computed with Eigen.
inline double normality_residual(const DenseMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXd e(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) e(i, j) = m(i, j);
  const double f = e.norm();
  return (e * e.transpose() - e.transpose() * e).norm() / (1.0 + f * f);
}

inline std::vector<Complex> flat(double lambda0, const std::vector<double>& reals,
                                 const std::vector<Complex>& pairs) {
  std::vector<Complex> out{Complex(lambda0, 0.0)};
  for (double r : reals) out.emplace_back(r, 0.0);
  for (const Complex& z : pairs) {
    out.push_back(z);
    out.push_back(std::conj(z));
  }
  return out;
}

/// The 8x8 matrix realizing {20, -1, -2, -3, 3 +- 4i, +-2i} from its closed-form entries.
inline DenseMatrix golden_eight() {
  const double s3 = std::numbers::sqrt3;
  const double e = std::sqrt(85.0 / 12.0);
  const double d = 20.0 / 6.0, p = (11 + 6 * s3) / 6, q = (11 - 6 * s3) / 6;
  const double r = (13 - 2 * s3) / 6, t = (13 + 2 * s3) / 6, w = 22.0 / 6.0;
  return DenseMatrix{{0, e, e, e, e, e, e, 3},  {e, d, p, q, r, t, w, e}, {e, q, d, p, t, w, r, e},
                     {e, p, q, d, w, r, t, e},  {e, t, r, w, d, q, p, e}, {e, r, w, t, p, d, q, e},
                     {e, w, t, r, q, p, d, e},  {3, e, e, e, e, e, e, 0}};
}

/// The 10x10 matrix realizing {20, -1, -1, -2, +-2i, +-2i, 4 +- 3i}.
inline DenseMatrix golden_ten() {
  const double s3 = std::numbers::sqrt3;
  const double a = 4.0 / 3.0, hi = (4 + 2 * s3) / 3, lo = (4 - 2 * s3) / 3;
  const double g = std::sqrt(55.0) / (2 * s3), f = 5.0 / 3.0;
  return DenseMatrix{{a, hi, lo, g, g, g, g, f, f, f},
                     {lo, a, hi, g, g, g, g, f, f, f},
                     {hi, lo, a, g, g, g, g, f, f, f},
                     {g, g, g, 4, 1.5, 4.5, 0, g, g, g},
                     {g, g, g, 4.5, 4, 0, 1.5, g, g, g},
                     {g, g, g, 1.5, 0, 4, 4.5, g, g, g},
                     {g, g, g, 0, 4.5, 1.5, 4, g, g, g},
                     {f, f, f, g, g, g, g, a, lo, hi},
                     {f, f, f, g, g, g, g, hi, a, lo},
                     {f, f, f, g, g, g, g, lo, hi, a}};
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin() { return integer(0, 1) == 1; }

  /// Pair representative with b > 0 and modulus in (0, max_mod].
  Complex pair(double max_mod = 5.0) {
    const double r = uniform(0.05, max_mod);
    const double th = uniform(0.02, std::numbers::pi - 0.02);
    return std::polar(r, th);
  }

  /// n negative reals, nonincreasing.
  std::vector<double> negative_reals(std::size_t n, double max_abs = 5.0) {
    std::vector<double> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(-uniform(0.05, max_abs));
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
  }

  std::vector<Complex> pairs(std::size_t m, double max_mod = 5.0) {
    std::vector<Complex> v;
    for (std::size_t i = 0; i < m; ++i) v.push_back(pair(max_mod));
    return v;
  }

  /// Smallest lambda0 meeting lambda0 + sum(reals) - 2 sum|z| >= 0, plus a
  /// random slack that is exactly zero a quarter of the time.
  double lambda0_for(const std::vector<double>& reals, const std::vector<Complex>& pairs) {
    double need = 0.0;
    for (double r : reals) need -= r;
    for (const Complex& z : pairs) need += 2.0 * std::abs(z);
    const double slack = integer(0, 3) == 0 ? 0.0 : uniform(0.0, 3.0);
    return need + slack;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace testing_support
