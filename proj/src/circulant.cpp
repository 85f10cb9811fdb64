#include <cmath>
#include <numbers>

#include "cnniep/centro.hpp"
#include "cnniep/constructors.hpp"
#include "cnniep/errors.hpp"
#include "construct_detail.hpp"

namespace cnniep {

Vector circulant_row(double lead, std::span<const Complex> pairs) {
  const std::size_t s = pairs.size();
  const std::size_t n = 2 * s + 1;
  const double nd = static_cast<double>(n);
  Vector row(n);
  for (std::size_t k = 0; k < n; ++k) {
    double acc = lead;
    for (std::size_t j = 1; j <= s; ++j) {
      // Reduce jk mod n before scaling so the angle stays in [0, 2 pi).
      const double theta = 2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / nd;
      acc += 2.0 * (pairs[j - 1].real() * std::cos(theta) + pairs[j - 1].imag() * std::sin(theta));
    }
    row[k] = acc / nd;
  }
  return row;
}

DenseMatrix circulant(std::span<const double> row) {
  const std::size_t n = row.size();
  DenseMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = row[(j + n - i) % n];
  return c;
}

double sqrt3_margin(double lambda0, Complex z) {
  return lambda0 - std::abs(z.real()) - std::numbers::sqrt3 * std::abs(z.imag());
}

Realization realize_circulant(double lambda0, std::span<const Complex> pairs) {
  detail::require_standard_hypotheses(lambda0, {}, pairs, 0);
  const Vector row = circulant_row(lambda0, pairs);
  Realization r;
  r.matrix = circulant(row);
  r.perron = {lambda0, detail::uniform_vector(row.size())};
  r.spectrum = detail::flat_spectrum(lambda0, {}, pairs);
  r.trace.push_back(detail::make_step("realize_circulant", {{"lambda0", lambda0}}, r));
  return r;
}

CirculantCoefficients circulant_coefficients(double lambda0, double lambda1,
                                             std::span<const Complex> pairs) {
  if (pairs.empty() || pairs.size() % 2 != 0) {
    throw InvalidArgument("circulant_coefficients: need an even, nonzero number of pairs");
  }
  const std::size_t s = pairs.size() / 2;
  return {s, circulant_row(lambda0, pairs.first(s)), circulant_row(lambda1, pairs.subspan(s))};
}

Realization realize_circulant_pair(double lambda0, double lambda1, std::span<const Complex> pairs) {
  const double reals[] = {lambda1};
  detail::require_standard_hypotheses(lambda0, reals, pairs, 1);
  const CirculantCoefficients k = circulant_coefficients(lambda0, lambda1, pairs);

  Realization r;
  r.matrix = from_split({circulant(k.d), circulant(k.c)});
  r.perron = {lambda0, detail::uniform_vector(r.matrix.rows())};
  r.spectrum = detail::flat_spectrum(lambda0, reals, pairs);
  r.trace.push_back(detail::make_step("realize_circulant_pair",
                                      {{"lambda0", lambda0}, {"lambda1", lambda1}}, r));
  return r;
}

}  // namespace cnniep
