#include <cmath>

#include "cnniep/centro.hpp"
#include "cnniep/constructors.hpp"
#include "cnniep/errors.hpp"
#include "construct_detail.hpp"

namespace cnniep {

FourByFourMargins check_4x4_necessary(double lambda0, double lambda1, Complex z) {
  return {lambda0 + lambda1 - 2.0 * std::abs(z.real()),
          lambda0 - lambda1 - 2.0 * std::abs(z.imag())};
}

Realization realize_4x4(double lambda0, double lambda1, Complex z) {
  if (!std::isfinite(lambda0) || !std::isfinite(lambda1)) {
    throw InvalidArgument("realize_4x4: non-finite input");
  }
  const Complex pair[] = {z};
  detail::require_valid_pairs(pair);
  const FourByFourMargins m = check_4x4_necessary(lambda0, lambda1, z);
  const double slack = detail::margin_slack(lambda0);
  detail::require_margin("lambda0 + lambda1 - 2|a| >= 0", m.sum_margin, slack);
  detail::require_margin("lambda0 - lambda1 - 2|b| >= 0", m.diff_margin, slack);

  const double a = z.real();
  const double b = z.imag();
  const double l0 = lambda0;
  const double l1 = lambda1;
  CentroBlocksEven blocks{2,
                          DenseMatrix{{(l0 + l1 + 2 * a) / 4, (l0 - l1 - 2 * b) / 4},
                                      {(l0 - l1 + 2 * b) / 4, (l0 + l1 + 2 * a) / 4}},
                          DenseMatrix{{(l0 - l1 - 2 * b) / 4, (l0 + l1 - 2 * a) / 4},
                                      {(l0 + l1 - 2 * a) / 4, (l0 - l1 + 2 * b) / 4}}};
  Realization r;
  r.matrix = assemble(blocks);
  r.perron = {lambda0, Vector(4, 0.5)};
  const double reals[] = {lambda1};
  r.spectrum = detail::flat_spectrum(lambda0, reals, pair);
  r.trace.push_back(detail::make_step(
      "realize_4x4", {{"lambda0", lambda0}, {"lambda1", lambda1}, {"a", a}, {"b", b}}, r));
  return r;
}

Realization realize_three_pairs_8x8(double lambda0, double lambda1, Complex z1, Complex z2,
                                    Complex z3) {
  const Complex pairs[] = {z1, z2, z3};
  const double reals[] = {lambda1};
  detail::require_standard_hypotheses(lambda0, reals, pairs, 1);

  const double a1 = z1.real(), b1 = z1.imag();
  const double a2 = z2.real(), b2 = z2.imag();
  const double a3 = z3.real(), b3 = z3.imag();
  const double sa = a2 + a3, da = a2 - a3;
  const double sb = b2 + b3, db = b2 - b3;
  DenseMatrix minus{{sa, -sb, -db, da}, {sb, sa, da, db}, {db, da, sa, sb}, {da, -db, -sb, sa}};
  minus = 0.5 * minus;

  const double L = lambda0 + lambda1;
  const double D = lambda0 - lambda1;
  DenseMatrix plus{{L + 2 * a1, D - 2 * b1, D + 2 * b1, L - 2 * a1},
                   {D + 2 * b1, L + 2 * a1, L - 2 * a1, D - 2 * b1},
                   {D - 2 * b1, L - 2 * a1, L + 2 * a1, D + 2 * b1},
                   {L - 2 * a1, D + 2 * b1, D - 2 * b1, L + 2 * a1}};
  plus = 0.25 * plus;

  Realization r;
  r.matrix = from_split({minus, plus});
  r.perron = {lambda0, detail::uniform_vector(8)};
  r.spectrum = detail::flat_spectrum(lambda0, reals, pairs);
  r.trace.push_back(detail::make_step("realize_three_pairs_8x8",
                                      {{"lambda0", lambda0}, {"lambda1", lambda1}}, r));
  return r;
}

}  // namespace cnniep
