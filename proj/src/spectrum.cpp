#include "cnniep/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>

#include "cnniep/errors.hpp"

namespace cnniep {

std::vector<Complex> Spectrum::values() const {
  std::vector<Complex> out;
  out.reserve(size());
  out.emplace_back(perron, 0.0);
  for (double r : reals) out.emplace_back(r, 0.0);
  for (const Complex& z : pairs) {
    out.push_back(z);
    out.push_back(std::conj(z));
  }
  return out;
}

Spectrum Spectrum::normalize(std::span<const Complex> values, double conj_tol) {
  std::vector<double> reals;
  std::vector<Complex> upper;
  std::vector<Complex> lower;
  for (const Complex& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw InvalidArgument("spectrum contains a non-finite value");
    }
    if (std::abs(v.imag()) <= conj_tol) {
      reals.push_back(v.real());
    } else if (v.imag() > 0) {
      upper.push_back(v);
    } else {
      lower.push_back(v);
    }
  }
  if (upper.size() != lower.size()) {
    throw NotSelfConjugate("list is not closed under conjugation: " +
                           std::to_string(upper.size()) + " values above the real axis, " +
                           std::to_string(lower.size()) + " below");
  }

  Spectrum s;
  std::vector<bool> used(lower.size(), false);
  for (const Complex& z : upper) {
    std::size_t best = lower.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < lower.size(); ++k) {
      if (used[k]) continue;
      const double d = std::abs(lower[k] - std::conj(z));
      if (d < best_d) {
        best_d = d;
        best = k;
      }
    }
    const double scale = std::max(1.0, std::abs(z));
    if (best == lower.size() || best_d > conj_tol * scale) {
      throw NotSelfConjugate("no conjugate partner for (" + std::to_string(z.real()) + ", " +
                             std::to_string(z.imag()) + ")");
    }
    used[best] = true;
    const Complex& w = lower[best];
    s.pairs.emplace_back(0.5 * (z.real() + w.real()), 0.5 * (z.imag() - w.imag()));
  }

  if (reals.empty()) throw PerronViolation("no real value available as Perron root");
  std::sort(reals.begin(), reals.end(), std::greater<>());
  s.perron = reals.front();
  s.reals.assign(reals.begin() + 1, reals.end());

  const double bound = s.perron + 1e-12 * std::max(1.0, std::abs(s.perron));
  for (const Complex& v : values) {
    if (std::abs(v) > bound) {
      throw PerronViolation("|" + std::to_string(std::abs(v)) + "| exceeds the Perron candidate " +
                            std::to_string(s.perron));
    }
  }
  return s;
}

double sum_of_moduli(std::span<const Complex> pairs) {
  double s = 0.0;
  for (const Complex& z : pairs) s += std::abs(z);
  return s;
}

SpectrumMatch match_spectra(std::span<const Complex> computed,
                            std::span<const Complex> target, double tol) {
  const std::size_t n = computed.size();
  if (target.size() != n) {
    throw DimensionMismatch("spectra differ in cardinality: " + std::to_string(n) + " vs " +
                            std::to_string(target.size()));
  }
  struct Candidate {
    double dist;
    std::size_t i;
    std::size_t j;
  };
  std::vector<Candidate> cands;
  cands.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cands.push_back({std::abs(computed[i] - target[j]), i, j});

  auto key = [&](const Candidate& c) {
    return std::make_tuple(c.dist, computed[c.i].real(), computed[c.i].imag(),
                           target[c.j].real(), target[c.j].imag());
  };
  std::sort(cands.begin(), cands.end(),
            [&](const Candidate& a, const Candidate& b) { return key(a) < key(b); });

  std::vector<bool> used_c(n, false);
  std::vector<bool> used_t(n, false);
  double worst = 0.0;

  auto nearest_unused = [](std::span<const Complex> list, const std::vector<bool>& used,
                           Complex want) {
    std::size_t best = list.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < list.size(); ++k) {
      if (used[k]) continue;
      const double d = std::abs(list[k] - want);
      if (d < best_d) {
        best_d = d;
        best = k;
      }
    }
    return best;
  };

  for (const Candidate& c : cands) {
    if (used_c[c.i] || used_t[c.j]) continue;
    used_c[c.i] = true;
    used_t[c.j] = true;
    worst = std::max(worst, c.dist);
    const bool nonreal_c = std::abs(computed[c.i].imag()) > kConjugateTolerance;
    const bool nonreal_t = std::abs(target[c.j].imag()) > kConjugateTolerance;
    if (!(nonreal_c && nonreal_t)) continue;
    const std::size_t k = nearest_unused(computed, used_c, std::conj(computed[c.i]));
    const std::size_t l = nearest_unused(target, used_t, std::conj(target[c.j]));
    if (k == n || l == n) continue;
    used_c[k] = true;
    used_t[l] = true;
    worst = std::max(worst, std::abs(computed[k] - target[l]));
  }
  return {worst <= tol, worst};
}

SpectrumMatch match_spectra(const Spectrum& computed, const Spectrum& target, double tol) {
  const auto a = computed.values();
  const auto b = target.values();
  return match_spectra(a, b, tol);
}

}  // namespace cnniep
