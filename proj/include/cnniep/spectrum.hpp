#pragma once

#include <complex>
#include <span>
#include <vector>

namespace cnniep {

using Complex = std::complex<double>;

/// Imaginary parts at or below this are treated as zero when pairing conjugates.
inline constexpr double kConjugateTolerance = 1e-9;

/// A self-conjugate multiset in normalized form: the Perron candidate, the
/// remaining real values in descending order, and one representative with
/// positive imaginary part for each conjugate pair.
struct Spectrum {
  double perron = 0.0;
  std::vector<double> reals;
  std::vector<Complex> pairs;

  std::size_t size() const noexcept { return 1 + reals.size() + 2 * pairs.size(); }

  /// Flat multiset: perron, reals, then each pair followed by its conjugate.
  std::vector<Complex> values() const;

  /// Normalizes an arbitrary list. Throws NotSelfConjugate when a non-real
  /// value has no conjugate partner, PerronViolation when the largest real
  /// value does not dominate every modulus (or no real value exists).
  static Spectrum normalize(std::span<const Complex> values,
                            double conj_tol = kConjugateTolerance);
};

/// Sum of moduli of the pair representatives.
double sum_of_moduli(std::span<const Complex> pairs);

struct SpectrumMatch {
  bool ok = false;
  double max_distance = 0.0;
};

/// Greedy nearest-neighbour matching with conjugate-pair locking: candidate
/// pairs are taken in ascending distance (ties broken lexicographically by
/// (re, im)); when a non-real value is matched, its conjugate is matched to
/// the target's conjugate in the same step. Throws DimensionMismatch if the
/// cardinalities differ.
SpectrumMatch match_spectra(std::span<const Complex> computed,
                            std::span<const Complex> target, double tol);

SpectrumMatch match_spectra(const Spectrum& computed, const Spectrum& target, double tol);

}  // namespace cnniep
