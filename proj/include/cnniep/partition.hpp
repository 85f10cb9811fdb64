#pragma once

#include <optional>
#include <vector>

#include "cnniep/dense_matrix.hpp"
#include "cnniep/spectrum.hpp"

namespace cnniep {

enum class PartitionMode {
  /// Blocks Lambda_1..Lambda_S, each realized (with lead replaced by omega_j)
  /// by a normal centrosymmetric nonnegative matrix. B has diagonal
  /// omega_S, ..., omega_1.
  plain,
  /// Blocks Lambda_1..Lambda_m appear twice (mirrored) and are realized by
  /// any normal nonnegative matrices; Lambda_{m+1}..Lambda_{m+S} are realized
  /// by normal centrosymmetric ones. B has diagonal
  /// omega_1..omega_m, omega_{m+1}..omega_{m+S}, omega_m..omega_1.
  mixed,
};

struct PartitionBlock {
  /// Lambda_j; the first element is the designated lead lambda_{j1}.
  std::vector<Complex> values;
  double omega = 0.0;
  /// Optional caller-supplied realizer of Gamma_j = {omega_j} + values[1..].
  std::optional<DenseMatrix> realizer;
};

struct PartitionSpec {
  PartitionMode mode = PartitionMode::plain;
  std::vector<PartitionBlock> blocks;
  /// m in mixed mode (number of mirrored blocks); ignored in plain mode.
  std::size_t mirrored = 0;
  /// Coupling matrix B.
  DenseMatrix coupling;

  /// Gamma_j = {omega_j} followed by the non-lead values of Lambda_j.
  std::vector<Complex> gamma(std::size_t j) const;
  /// The full multiset the partition describes (mirrored blocks counted twice).
  std::vector<Complex> described_values() const;
  /// The eigenvalues B must have, in diagonal order.
  std::vector<Complex> coupling_targets() const;
  /// The diagonal B must have, in order.
  std::vector<double> coupling_diagonal() const;
};

}  // namespace cnniep
