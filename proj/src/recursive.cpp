#include <algorithm>
#include <cmath>
#include <numeric>

#include "cnniep/constructors.hpp"
#include "cnniep/errors.hpp"
#include "construct_detail.hpp"

namespace cnniep {

namespace {

// Bordering radius that turns [[lambda0 + last, rho], [rho, 0]] into
// eigenvalues {lambda0, last}.
double border_radius(double lambda0, double last) { return std::sqrt(std::max(0.0, -lambda0 * last)); }

// Recursion step shared by the constructions that peel off the last two
// reals: realize {lambda0 + l_{n-1} + l_n, l_1..l_{n-2}, pairs}, then append
// l_{n-1}, l_n around a zero block.
template <typename Inner>
Realization peel_last_two(double lambda0, std::span<const double> reals, Inner&& inner) {
  const std::size_t n = reals.size();
  const double a = reals[n - 2];
  const double b = reals[n - 1];
  const Realization q = inner(lambda0 + a + b, reals.first(n - 2));
  return append_two_reals(q, zero_block(), a, b);
}

}  // namespace

Realization realize_one_pair(double lambda0, std::span<const double> reals, Complex z) {
  const Complex pairs[] = {z};
  detail::require_standard_hypotheses(lambda0, reals, pairs, 1);
  const std::size_t n = reals.size();
  if (n == 1) return realize_4x4(lambda0, reals[0], z);
  if (n == 2) {
    return border_center(realize_4x4(lambda0 + reals[0], reals[1], z),
                         border_radius(lambda0, reals[0]));
  }
  // This construction peels the two largest reals, not the two smallest.
  const Realization q = realize_one_pair(lambda0 + reals[0] + reals[1], reals.subspan(2), z);
  return append_two_reals(q, zero_block(), reals[0], reals[1]);
}

Realization realize_even_pairs(double lambda0, std::span<const double> reals,
                               std::span<const Complex> pairs) {
  if (pairs.empty() || pairs.size() % 2 != 0) {
    throw InvalidArgument("realize_even_pairs: need an even, nonzero number of pairs");
  }
  detail::require_standard_hypotheses(lambda0, reals, pairs, 1);
  const std::size_t n = reals.size();
  if (n == 1) return realize_circulant_pair(lambda0, reals[0], pairs);
  if (n == 2) {
    return border_center(realize_circulant_pair(lambda0 + reals[1], reals[0], pairs),
                         border_radius(lambda0, reals[1]));
  }
  return peel_last_two(lambda0, reals, [&](double l0, std::span<const double> rest) {
    return realize_even_pairs(l0, rest, pairs);
  });
}

Realization realize_three_pairs(double lambda0, std::span<const double> reals,
                                std::span<const Complex> pairs) {
  if (pairs.size() != 3) throw InvalidArgument("realize_three_pairs: need exactly three pairs");
  detail::require_standard_hypotheses(lambda0, reals, pairs, 1);
  const std::size_t n = reals.size();
  if (n == 1) return realize_three_pairs_8x8(lambda0, reals[0], pairs[0], pairs[1], pairs[2]);
  if (n == 2) {
    return border_center(
        realize_three_pairs_8x8(lambda0 + reals[1], reals[0], pairs[0], pairs[1], pairs[2]),
        border_radius(lambda0, reals[1]));
  }
  return peel_last_two(lambda0, reals, [&](double l0, std::span<const double> rest) {
    return realize_three_pairs(l0, rest, pairs);
  });
}

Realization realize_four_reals(double lambda0, std::span<const double> reals,
                               std::span<const Complex> pairs) {
  if (reals.size() != 3) throw InvalidArgument("realize_four_reals: need exactly three reals");
  if (pairs.empty()) throw InvalidArgument("realize_four_reals: need at least one pair");
  detail::require_standard_hypotheses(lambda0, reals, pairs, 3);
  const std::size_t m = pairs.size();
  if (m == 1) return realize_one_pair(lambda0, reals, pairs[0]);
  if (m % 2 == 0) return realize_even_pairs(lambda0, reals, pairs);
  if (m == 3) return realize_three_pairs(lambda0, reals, pairs);

  // Odd m >= 5: {lambda0', lambda1, z4..zm} and {lambda0'', lambda3, z1..z3},
  // coupled so that lambda0', lambda0'' become lambda0, lambda2.
  const double l1 = reals[0], l2 = reals[1], l3 = reals[2];
  const double s3 = sum_of_moduli(pairs.first(3));
  const double lp = lambda0 + l2 + l3 - 2.0 * s3;
  const double lpp = -l3 + 2.0 * s3;
  const double first_real[] = {l1};
  const double third_real[] = {l3};
  const Realization q1 = realize_even_pairs(lp, first_real, pairs.subspan(3));
  const Realization q2 = realize_three_pairs(lpp, third_real, pairs.first(3));

  const double sigma = lambda0 - std::max(lp, lpp);
  const double rho = std::sqrt(std::max(0.0, sigma * (std::abs(lp - lpp) + sigma)));
  const detail::Symmetric2x2 e = detail::symmetric_2x2(lp, rho, lpp);
  const double scale = std::max({1.0, std::abs(lambda0), std::abs(lp), std::abs(lpp)});
  if (std::abs(e.larger - lambda0) > 1e-10 * scale || std::abs(e.smaller - l2) > 1e-10 * scale) {
    throw InternalCheck("realize_four_reals: coupling eigenvalues are not {lambda0, lambda2}");
  }

  // xu_combine needs the block with the larger Perron root first.
  const bool q1_first = lp >= lpp;
  const Realization joined = q1_first ? xu_combine(q1, q2, rho) : xu_combine(q2, q1, rho);
  const std::size_t n1 = q1.order();
  const std::size_t n2 = q2.order();
  const std::size_t h1 = n1 / 2;
  const std::size_t q1_at = q1_first ? 0 : n2;
  const std::size_t q2_at = q1_first ? n1 : 0;
  // Final order: first half of Q1, all of Q2, second half of Q1.
  std::vector<std::size_t> perm;
  perm.reserve(n1 + n2);
  for (std::size_t i = 0; i < h1; ++i) perm.push_back(q1_at + i);
  for (std::size_t i = 0; i < n2; ++i) perm.push_back(q2_at + i);
  for (std::size_t i = h1; i < n1; ++i) perm.push_back(q1_at + i);

  Realization r;
  r.matrix = detail::finalize_centro(permute_symmetric(joined.matrix, perm), "realize_four_reals");
  Vector w(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) w[i] = joined.perron.vector[perm[i]];
  r.perron = {lambda0, std::move(w)};
  r.spectrum = joined.spectrum;
  r.spectrum[0] = Complex(lambda0, 0.0);
  r.spectrum[1] = Complex(l2, 0.0);
  r.trace = q1.trace;
  detail::append_traces(r.trace, q2.trace);
  r.trace.push_back(detail::make_step("xu_combine",
                                      {{"lambda0_prime", lp},
                                       {"lambda0_double_prime", lpp},
                                       {"sigma", sigma},
                                       {"rho", rho}},
                                      r));
  return r;
}

Realization realize_general(double lambda0, std::span<const double> reals,
                            std::span<const Complex> pairs) {
  if (pairs.empty()) throw InvalidArgument("realize_general: need at least one pair");
  detail::require_standard_hypotheses(lambda0, reals, pairs, 3);
  const std::size_t n = reals.size();
  if (n == 3) return realize_four_reals(lambda0, reals, pairs);
  if (n == 4) {
    return border_center(realize_four_reals(lambda0 + reals[3], reals.first(3), pairs),
                         border_radius(lambda0, reals[3]));
  }
  return peel_last_two(lambda0, reals, [&](double l0, std::span<const double> rest) {
    return realize_general(l0, rest, pairs);
  });
}

}  // namespace cnniep
