#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cnniep/centro.hpp"
#include "cnniep/dense_matrix.hpp"
#include "cnniep/spectral.hpp"
#include "cnniep/spectrum.hpp"

namespace cnniep {

/// One construction step: which operation ran, with what parameters, and
/// the order and eigenvalue multiset of the matrix it produced.
struct TraceStep {
  std::string operation;
  std::vector<std::pair<std::string, double>> params;
  std::size_t order = 0;
  std::vector<Complex> spectrum;
};

using RealizationTrace = std::vector<TraceStep>;

/// A constructed matrix together with what the construction guarantees
/// about it: the eigenvalue multiset it realizes and a Perron vector
/// (carried analytically through the constructions, not recomputed).
struct Realization {
  DenseMatrix matrix;
  PerronData perron;
  std::vector<Complex> spectrum;
  RealizationTrace trace;

  std::size_t order() const { return matrix.order(); }
  /// Block form of the matrix; throws NotCentrosymmetric for non-centrosymmetric results.
  CentroBlocks blocks() const { return split(matrix); }
};

/// Wraps a caller-supplied nonnegative normal matrix: computes its spectrum
/// and Perron data numerically. With `centrosymmetric` set, the Perron
/// vector is exchange-symmetric.
Realization realization_of(const DenseMatrix& m, bool centrosymmetric = true);

/// The 1x1 zero matrix with Perron data (0, [1]); the B = [0] used by the
/// bordering steps.
Realization zero_block();

}  // namespace cnniep
