#include "cnniep/realization.hpp"

#include "cnniep/partition.hpp"

namespace cnniep {

Realization realization_of(const DenseMatrix& m, bool centrosymmetric) {
  Realization r;
  r.matrix = m;
  r.spectrum = eigenvalues(m);
  PowerIterationOptions opts;
  opts.exchange_symmetric = centrosymmetric;
  r.perron = perron_data(m, opts);
  return r;
}

Realization zero_block() {
  Realization r;
  r.matrix = DenseMatrix(1, 1, 0.0);
  r.perron = {0.0, Vector{1.0}};
  r.spectrum = {Complex(0.0, 0.0)};
  return r;
}

std::vector<Complex> PartitionSpec::gamma(std::size_t j) const {
  const PartitionBlock& b = blocks.at(j);
  std::vector<Complex> out;
  out.reserve(b.values.size());
  out.emplace_back(b.omega, 0.0);
  for (std::size_t k = 1; k < b.values.size(); ++k) out.push_back(b.values[k]);
  return out;
}

std::vector<Complex> PartitionSpec::described_values() const {
  std::vector<Complex> out;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    const int copies = mode == PartitionMode::mixed && j < mirrored ? 2 : 1;
    for (int c = 0; c < copies; ++c)
      out.insert(out.end(), blocks[j].values.begin(), blocks[j].values.end());
  }
  return out;
}

namespace {

// Block index for each position of B's diagonal.
std::vector<std::size_t> diagonal_blocks(const PartitionSpec& spec) {
  std::vector<std::size_t> idx;
  const std::size_t total = spec.blocks.size();
  if (spec.mode == PartitionMode::plain) {
    for (std::size_t c = 0; c < total; ++c) idx.push_back(total - 1 - c);
    return idx;
  }
  const std::size_t m = std::min(spec.mirrored, total);
  for (std::size_t j = 0; j < total; ++j) idx.push_back(j);
  for (std::size_t k = 0; k < m; ++k) idx.push_back(m - 1 - k);
  return idx;
}

}  // namespace

std::vector<Complex> PartitionSpec::coupling_targets() const {
  std::vector<Complex> out;
  for (std::size_t j : diagonal_blocks(*this)) {
    out.push_back(blocks[j].values.empty() ? Complex(0.0, 0.0) : blocks[j].values.front());
  }
  return out;
}

std::vector<double> PartitionSpec::coupling_diagonal() const {
  std::vector<double> out;
  for (std::size_t j : diagonal_blocks(*this)) out.push_back(blocks[j].omega);
  return out;
}

}  // namespace cnniep
