#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "cnniep/centro.hpp"
#include "cnniep/constructors.hpp"
#include "cnniep/errors.hpp"
#include "construct_detail.hpp"

namespace cnniep {

namespace {

void require_nonnegative_parameter(const char* name, double value) {
  if (!std::isfinite(value) || value < 0.0) {
    throw InvalidArgument(std::string(name) + " must be a finite nonnegative number");
  }
}

}  // namespace

Realization xu_combine(const Realization& a, const Realization& b, double rho) {
  require_nonnegative_parameter("rho", rho);
  detail::require_combinable(a, false, "xu_combine (A)");
  detail::require_combinable(b, false, "xu_combine (B)");
  const double alpha0 = a.perron.root;
  const double beta0 = b.perron.root;
  if (alpha0 < beta0) throw InvalidArgument("xu_combine: need alpha0 >= beta0");

  const std::size_t m = a.order();
  const std::size_t n = b.order();
  const Vector& u = a.perron.vector;
  const Vector& v = b.perron.vector;

  DenseMatrix q(m + n, m + n);
  q.set_block(0, 0, a.matrix);
  q.set_block(m, m, b.matrix);
  q.set_block(0, m, outer(u, v, rho));
  q.set_block(m, 0, outer(v, u, rho));

  const detail::Symmetric2x2 e = detail::symmetric_2x2(alpha0, rho, beta0);
  Realization r;
  r.matrix = std::move(q);
  Vector w(m + n);
  for (std::size_t i = 0; i < m; ++i) w[i] = e.v0 * u[i];
  for (std::size_t i = 0; i < n; ++i) w[m + i] = e.v1 * v[i];
  r.perron = {e.larger, std::move(w)};

  std::vector<Complex> sa = a.spectrum;
  std::vector<Complex> sb = b.spectrum;
  detail::remove_one(sa, alpha0);
  detail::remove_one(sb, beta0);
  r.spectrum = {Complex(e.larger, 0.0), Complex(e.smaller, 0.0)};
  r.spectrum.insert(r.spectrum.end(), sa.begin(), sa.end());
  r.spectrum.insert(r.spectrum.end(), sb.begin(), sb.end());
  r.trace = a.trace;
  detail::append_traces(r.trace, b.trace);
  r.trace.push_back(detail::make_step("xu_combine", {{"alpha0", alpha0}, {"beta0", beta0}, {"rho", rho}}, r));
  return r;
}

Realization centro_combine(const Realization& a, const Realization& b, CombineParams params) {
  require_nonnegative_parameter("rho", params.rho);
  require_nonnegative_parameter("xi", params.xi);
  detail::require_combinable(a, true, "centro_combine (A)");
  detail::require_combinable(b, true, "centro_combine (B)");
  const double rho = params.rho;
  const double xi = params.xi;
  const double alpha1 = a.perron.root;
  const double beta1 = b.perron.root;
  const Vector& u = a.perron.vector;
  const Vector& v = b.perron.vector;
  const std::size_t m = a.order();
  const std::size_t n = b.order();

  DenseMatrix q(2 * n + m, 2 * n + m);
  const DenseMatrix vu = outer(v, u, rho);
  const DenseMatrix uv = outer(u, v, rho);
  const DenseMatrix vv = outer(v, v, xi);
  q.set_block(0, 0, b.matrix);
  q.set_block(0, n, vu);
  q.set_block(0, n + m, vv);
  q.set_block(n, 0, uv);
  q.set_block(n, n, a.matrix);
  q.set_block(n, n + m, uv);
  q.set_block(n + m, 0, vv);
  q.set_block(n + m, n, vu);
  q.set_block(n + m, n + m, b.matrix);

  // Eigenvalues of [[beta1, rho, xi], [rho, alpha1, rho], [xi, rho, beta1]]:
  // beta1 - xi on (1, 0, -1), the rest from the symmetric 2x2 on
  // ((1, 0, 1) / sqrt2, (0, 1, 0)).
  const detail::Symmetric2x2 e =
      detail::symmetric_2x2(beta1 + xi, std::numbers::sqrt2 * rho, alpha1);

  Realization r;
  r.matrix = detail::finalize_centro(q, "centro_combine");
  Vector w(2 * n + m);
  const double outer_weight = e.v0 / std::numbers::sqrt2;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = outer_weight * v[i];
    w[n + m + i] = outer_weight * v[i];
  }
  for (std::size_t i = 0; i < m; ++i) w[n + i] = e.v1 * u[i];
  r.perron = {e.larger, std::move(w)};

  std::vector<Complex> sa = a.spectrum;
  std::vector<Complex> sb = b.spectrum;
  detail::remove_one(sa, alpha1);
  detail::remove_one(sb, beta1);
  r.spectrum = {Complex(e.larger, 0.0), Complex(e.smaller, 0.0), Complex(beta1 - xi, 0.0)};
  r.spectrum.insert(r.spectrum.end(), sa.begin(), sa.end());
  r.spectrum.insert(r.spectrum.end(), sb.begin(), sb.end());
  r.spectrum.insert(r.spectrum.end(), sb.begin(), sb.end());
  r.trace = a.trace;
  detail::append_traces(r.trace, b.trace);
  r.trace.push_back(detail::make_step(
      "centro_combine", {{"alpha1", alpha1}, {"beta1", beta1}, {"rho", rho}, {"xi", xi}}, r));
  return r;
}

Realization append_two_reals(const Realization& a, const Realization& b, double a_shift,
                             double b_shift) {
  if (!std::isfinite(a_shift) || !std::isfinite(b_shift)) {
    throw InvalidArgument("append_two_reals: non-finite shift");
  }
  const double alpha1 = a.perron.root;
  const double beta1 = b.perron.root;
  const double slack = detail::margin_slack(alpha1);
  detail::require_margin("alpha1 >= beta1", alpha1 - beta1, slack);
  detail::require_margin("alpha1 - beta1 >= a", alpha1 - beta1 - a_shift, slack);
  detail::require_margin("a >= b", a_shift - b_shift, 0.0);
  detail::require_margin("a + b <= 0", -(a_shift + b_shift), 0.0);

  const double rho =
      std::sqrt(std::max(0.0, -(alpha1 - beta1 - a_shift) * (a_shift + b_shift) / 2.0));
  const double xi = -b_shift;
  Realization r = centro_combine(a, b, {rho, xi});

  // The replaced eigenvalues have closed forms; check the combination
  // produced them and record the exact values.
  double want[] = {alpha1 - (a_shift + b_shift), beta1 + a_shift, beta1 + b_shift};
  double got[] = {r.spectrum[0].real(), r.spectrum[1].real(), r.spectrum[2].real()};
  std::sort(std::begin(want), std::end(want));
  std::sort(std::begin(got), std::end(got));
  const double scale = std::max({1.0, std::abs(alpha1), std::abs(beta1), std::abs(a_shift),
                                 std::abs(b_shift)});
  for (int i = 0; i < 3; ++i) {
    if (std::abs(want[i] - got[i]) > 1e-10 * scale) {
      throw InternalCheck("append_two_reals: coupling eigenvalues differ from the closed form");
    }
  }
  r.spectrum[0] = Complex(alpha1 - (a_shift + b_shift), 0.0);
  r.spectrum[1] = Complex(beta1 + a_shift, 0.0);
  r.spectrum[2] = Complex(beta1 + b_shift, 0.0);
  r.perron.root = alpha1 - (a_shift + b_shift);
  r.trace.pop_back();
  r.trace.push_back(detail::make_step(
      "append_two_reals",
      {{"alpha1", alpha1}, {"beta1", beta1}, {"a", a_shift}, {"b", b_shift}, {"rho", rho}, {"xi", xi}},
      r));
  return r;
}

Realization border_center(const Realization& even, double rho) {
  const std::size_t n = even.order();
  if (n % 2 != 0) throw InvalidArgument("border_center: need an even-order matrix");
  detail::require_combinable(even, true, "border_center");
  const std::size_t k = n / 2;

  Realization joined = xu_combine(even, zero_block(), rho);
  // Move the appended index (n) to the centre (k).
  std::vector<std::size_t> perm(n + 1);
  std::iota(perm.begin(), perm.begin() + k, 0);
  perm[k] = n;
  std::iota(perm.begin() + k + 1, perm.end(), k);

  Realization r;
  r.matrix = detail::finalize_centro(permute_symmetric(joined.matrix, perm), "border_center");
  Vector w(n + 1);
  for (std::size_t i = 0; i <= n; ++i) w[i] = joined.perron.vector[perm[i]];
  r.perron = {joined.perron.root, std::move(w)};
  r.spectrum = std::move(joined.spectrum);
  r.trace = std::move(joined.trace);
  r.trace.pop_back();
  r.trace.push_back(
      detail::make_step("border_center", {{"alpha0", even.perron.root}, {"rho", rho}}, r));
  return r;
}

}  // namespace cnniep
