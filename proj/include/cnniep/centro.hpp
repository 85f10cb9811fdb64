#pragma once

// Centrosymmetric matrices: block assembly, splitting, and the orthogonal
// block-diagonalization into the "minus" part A - JC and the "plus" part
// A + JC (bordered by the centre row/column for odd orders).
//
// J, the reverse identity, is never stored. Every use of it is an index
// reversal, so assembly and reflection are exact.

#include <span>
#include <variant>

#include "cnniep/dense_matrix.hpp"

namespace cnniep {

inline constexpr double kCentroTolerance = 1e-12;

/// Q = [[A, JCJ], [C, JAJ]], order 2 * half.
struct CentroBlocksEven {
  std::size_t half = 0;
  DenseMatrix a;
  DenseMatrix c;

  friend bool operator==(const CentroBlocksEven&, const CentroBlocksEven&) = default;
};

/// Q = [[A, x, JCJ], [y^T, p, y^T J], [C, Jx, JAJ]], order 2 * half + 1.
struct CentroBlocksOdd {
  std::size_t half = 0;
  DenseMatrix a;
  DenseMatrix c;
  Vector x;
  Vector y;
  double p = 0.0;

  friend bool operator==(const CentroBlocksOdd&, const CentroBlocksOdd&) = default;
};

using CentroBlocks = std::variant<CentroBlocksEven, CentroBlocksOdd>;

/// The two diagonal blocks of the orthogonally similar form.
/// Even order: (A - JC, A + JC). Odd order: (A - JC, [[p, sqrt2 y^T], [sqrt2 x, A + JC]]).
struct SplitPair {
  DenseMatrix minus;
  DenseMatrix plus_part;
};

struct CentroCheck {
  bool ok = false;
  double residual = 0.0;
};

/// (JMJ)(i, j) = M(n-1-i, n-1-j).
DenseMatrix exchange_reflect(const DenseMatrix& m);

/// J * M for a matrix with any number of columns (row reversal).
DenseMatrix reverse_rows(const DenseMatrix& m);

Vector reversed(std::span<const double> v);
bool is_exchange_symmetric(std::span<const double> v);

/// max |M - JMJ| compared against tol.
CentroCheck is_centrosymmetric(const DenseMatrix& m, double tol = kCentroTolerance);

/// Replaces M by (M + JMJ) / 2. Mirrored entries are bitwise equal afterwards.
DenseMatrix centro_symmetrize(const DenseMatrix& m);

DenseMatrix assemble(const CentroBlocksEven& blocks);
DenseMatrix assemble(const CentroBlocksOdd& blocks);
DenseMatrix assemble(const CentroBlocks& blocks);

/// Inverse of assemble. Matrices within tol of centrosymmetric are first
/// symmetrized; larger residuals raise NotCentrosymmetric.
CentroBlocks split(const DenseMatrix& q, double tol = kCentroTolerance);

SplitPair block_diagonalize(const DenseMatrix& q, double tol = kCentroTolerance);

/// Rebuilds the centrosymmetric matrix whose block-diagonal form is `parts`:
/// A = (plus + minus) / 2, JC = (plus - minus) / 2, and for odd orders the
/// border of plus_part supplies p, x, y.
DenseMatrix from_split(const SplitPair& parts);

}  // namespace cnniep
