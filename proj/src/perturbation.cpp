#include <algorithm>
#include <cmath>
#include <string>

#include "cnniep/centro.hpp"
#include "cnniep/constructors.hpp"
#include "cnniep/errors.hpp"
#include "construct_detail.hpp"

namespace cnniep {

DenseMatrix rank_r_perturb(const DenseMatrix& a, const DenseMatrix& x,
                           std::span<const double> omega, const DenseMatrix& b) {
  const std::size_t n = a.order();
  const std::size_t r = omega.size();
  if (x.rows() != n || x.cols() != r) throw DimensionMismatch("rank_r_perturb: X must be n x r");
  if (b.rows() != r || b.cols() != r) throw DimensionMismatch("rank_r_perturb: B must be r x r");

  const DenseMatrix xt = x.transpose();
  if (max_abs_diff(xt * x, DenseMatrix::identity(r)) > 1e-10) {
    throw InvalidArgument("rank_r_perturb: columns of X are not orthonormal");
  }
  DenseMatrix x_omega = x;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < r; ++j) x_omega(i, j) *= omega[j];
  const double scale = std::max(1.0, a.max_abs());
  if (max_abs_diff(a * x, x_omega) > 1e-8 * scale) {
    throw InvalidArgument("rank_r_perturb: A X differs from X Omega");
  }
  const double bscale = std::max(1.0, b.max_abs());
  for (std::size_t j = 0; j < r; ++j) {
    if (std::abs(b(j, j) - omega[j]) > 1e-12 * bscale) {
      throw PartitionError("rank_r_perturb: diagonal of B differs from Omega at " +
                           std::to_string(j));
    }
  }
  if (!is_normal(b).ok) throw InvalidArgument("rank_r_perturb: B is not normal");

  DenseMatrix c = b;
  for (std::size_t j = 0; j < r; ++j) c(j, j) = 0.0;
  return a + x * c * xt;
}

namespace {

// A realizer placed into the block-diagonal base matrix: its row/column k
// goes to positions[k], and its Perron vector fills X's column `column`.
struct Placement {
  const Realization* realizer = nullptr;
  std::vector<std::size_t> positions;
  std::size_t column = 0;
};

// Positions of blocks nested around the centre of [offset, offset + total):
// the first block is outermost; each block takes half its order from each end.
std::vector<std::vector<std::size_t>> nested_positions(std::span<const std::size_t> orders,
                                                       std::size_t offset) {
  std::size_t total = 0;
  for (std::size_t p : orders) total += p;
  std::size_t left = offset;
  std::size_t right = offset + total;
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t p : orders) {
    std::vector<std::size_t> pos;
    const std::size_t lo = p / 2;
    const std::size_t hi = p - lo;
    for (std::size_t i = 0; i < lo; ++i) pos.push_back(left + i);
    // The odd (innermost) block puts its middle index at the centre.
    for (std::size_t i = 0; i < hi; ++i) pos.push_back(right - hi + i);
    left += lo;
    right -= hi;
    out.push_back(std::move(pos));
  }
  return out;
}

// Outer-to-inner order for the nested blocks `ids`, moving the odd one
// (at most one) innermost.
std::vector<std::size_t> nesting_order(std::vector<std::size_t> ids,
                                       std::span<const Realization> realizers) {
  std::size_t odd = 0;
  for (std::size_t id : ids) odd += realizers[id].order() % 2;
  if (odd > 1) throw PartitionError("at most one nested block may have odd size");
  std::stable_partition(ids.begin(), ids.end(),
                        [&](std::size_t id) { return realizers[id].order() % 2 == 0; });
  return ids;
}

void require_realizer(const PartitionSpec& spec, std::span<const Realization> realizers,
                      std::size_t j, bool centro) {
  const PartitionBlock& block = spec.blocks[j];
  const Realization& r = realizers[j];
  const std::string name = "block " + std::to_string(j + 1);
  if (block.values.empty()) throw PartitionError(name + " is empty");
  if (r.order() != block.values.size()) {
    throw PartitionError(name + ": realizer order " + std::to_string(r.order()) +
                         " differs from block size " + std::to_string(block.values.size()));
  }
  if (!(block.omega >= 0.0)) throw PartitionError(name + ": omega must be nonnegative");
  try {
    detail::require_combinable(r, centro, name.c_str());
  } catch (const PartitionError&) {
    throw;
  } catch (const Error& e) {
    throw PartitionError(e.what());
  }
  if (std::abs(r.perron.root - block.omega) > 1e-9 * std::max(1.0, std::abs(block.omega))) {
    throw PartitionError(name + ": realizer Perron root differs from omega");
  }
}

void require_coupling(const PartitionSpec& spec, std::size_t order) {
  const DenseMatrix& b = spec.coupling;
  if (b.rows() != order || b.cols() != order) {
    throw PartitionError("coupling matrix must be " + std::to_string(order) + "x" +
                         std::to_string(order));
  }
  const double scale = std::max(1.0, b.max_abs());
  const std::vector<double> diag = spec.coupling_diagonal();
  for (std::size_t i = 0; i < order; ++i) {
    if (std::abs(b(i, i) - diag[i]) > 1e-12 * scale) {
      throw PartitionError("diagonal of B differs from the omega sequence at position " +
                           std::to_string(i + 1));
    }
    for (std::size_t j = 0; j < order; ++j) {
      if (i != j && b(i, j) < -1e-12 * scale) {
        throw PartitionError("B - Omega has a negative entry");
      }
    }
  }
  if (!is_normal(b).ok) throw PartitionError("coupling matrix is not normal");
  const std::vector<Complex> targets = spec.coupling_targets();
  const SpectrumMatch match = match_spectra(eigenvalues(b), targets, 1e-8 * scale);
  if (!match.ok) throw PartitionError("eigenvalues of B differ from the block leads");
}

Realization assemble_partition(const PartitionSpec& spec, std::span<const Realization> realizers,
                               const std::vector<Placement>& placements, std::size_t order,
                               const char* operation) {
  const std::size_t r = spec.coupling.rows();
  DenseMatrix base(order, order);
  DenseMatrix x(order, r);
  for (const Placement& p : placements) {
    const DenseMatrix& m = p.realizer->matrix;
    const Vector& u = p.realizer->perron.vector;
    for (std::size_t i = 0; i < p.positions.size(); ++i) {
      for (std::size_t j = 0; j < p.positions.size(); ++j) base(p.positions[i], p.positions[j]) = m(i, j);
      x(p.positions[i], p.column) = u[i];
    }
  }
  const std::vector<double> omega = spec.coupling_diagonal();

  Realization out;
  out.matrix = detail::finalize_centro(rank_r_perturb(base, x, omega, spec.coupling), operation);

  // A Perron vector w of B lifts to the Perron vector X w of the result.
  PowerIterationOptions opts;
  opts.exchange_symmetric = false;
  const PerronData pb = perron_data(spec.coupling, opts);
  Vector w = x * pb.vector;
  for (std::size_t i = 0; i < order / 2; ++i) {
    const double avg = 0.5 * (w[i] + w[order - 1 - i]);
    w[i] = w[order - 1 - i] = avg;
  }
  const double nrm = norm2(w);
  for (double& v : w) v /= nrm;
  out.perron = {pb.root, std::move(w)};
  out.spectrum = spec.described_values();

  detail::Params params;
  for (std::size_t j = 0; j < spec.blocks.size(); ++j) {
    detail::append_traces(out.trace, realizers[j].trace);
    params.emplace_back("omega" + std::to_string(j + 1), spec.blocks[j].omega);
  }
  out.trace.push_back(detail::make_step(operation, std::move(params), out));
  return out;
}

}  // namespace

Realization realize_partitioned(const PartitionSpec& spec, std::span<const Realization> realizers) {
  if (spec.mode != PartitionMode::plain) {
    throw PartitionError("realize_partitioned: expected a plain-mode partition");
  }
  const std::size_t s = spec.blocks.size();
  if (s == 0) throw PartitionError("partition has no blocks");
  if (realizers.size() != s) throw PartitionError("need one realizer per block");
  for (std::size_t j = 0; j < s; ++j) require_realizer(spec, realizers, j, true);
  require_coupling(spec, s);

  std::vector<std::size_t> ids(s);
  for (std::size_t j = 0; j < s; ++j) ids[j] = s - 1 - j;
  ids = nesting_order(std::move(ids), realizers);
  std::vector<std::size_t> orders;
  std::size_t total = 0;
  for (std::size_t id : ids) {
    orders.push_back(realizers[id].order());
    total += orders.back();
  }
  const auto positions = nested_positions(orders, 0);

  std::vector<Placement> placements;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    // Column c of X belongs to block s - c (1-based), matching B's diagonal.
    placements.push_back({&realizers[ids[k]], positions[k], s - 1 - ids[k]});
  }
  return assemble_partition(spec, realizers, placements, total, "realize_partitioned");
}

Realization realize_partitioned_mixed(const PartitionSpec& spec,
                                      std::span<const Realization> realizers) {
  if (spec.mode != PartitionMode::mixed) {
    throw PartitionError("realize_partitioned_mixed: expected a mixed-mode partition");
  }
  const std::size_t total_blocks = spec.blocks.size();
  const std::size_t m = spec.mirrored;
  if (m > total_blocks) throw PartitionError("more mirrored blocks than blocks");
  if (total_blocks == 0) throw PartitionError("partition has no blocks");
  if (realizers.size() != total_blocks) throw PartitionError("need one realizer per block");
  const std::size_t s = total_blocks - m;
  for (std::size_t j = 0; j < total_blocks; ++j) require_realizer(spec, realizers, j, j >= m);
  require_coupling(spec, 2 * m + s);

  // B must commute with the exchange that swaps the two copies of the
  // mirrored blocks and fixes the centre.
  const std::size_t r = 2 * m + s;
  auto mirror = [&](std::size_t k) { return (k < m || k >= m + s) ? r - 1 - k : k; };
  const DenseMatrix& b = spec.coupling;
  const double bscale = std::max(1.0, b.max_abs());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (std::abs(b(i, j) - b(mirror(i), mirror(j))) > 1e-12 * bscale) {
        throw PartitionError("coupling matrix does not have the mirrored block structure");
      }
    }
  }

  std::size_t side = 0;
  for (std::size_t j = 0; j < m; ++j) side += realizers[j].order();
  std::vector<std::size_t> centre_ids;
  for (std::size_t j = m; j < total_blocks; ++j) centre_ids.push_back(j);
  centre_ids = nesting_order(std::move(centre_ids), realizers);
  std::vector<std::size_t> centre_orders;
  std::size_t centre = 0;
  for (std::size_t id : centre_ids) {
    centre_orders.push_back(realizers[id].order());
    centre += centre_orders.back();
  }
  const std::size_t order = 2 * side + centre;

  std::vector<Placement> placements;
  std::size_t offset = 0;
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t p = realizers[j].order();
    Placement first{&realizers[j], {}, j};
    Placement second{&realizers[j], {}, r - 1 - j};
    for (std::size_t a = 0; a < p; ++a) {
      first.positions.push_back(offset + a);
      second.positions.push_back(order - 1 - (offset + a));
    }
    placements.push_back(std::move(first));
    placements.push_back(std::move(second));
    offset += p;
  }
  const auto positions = nested_positions(centre_orders, side);
  for (std::size_t k = 0; k < centre_ids.size(); ++k) {
    placements.push_back({&realizers[centre_ids[k]], positions[k], centre_ids[k]});
  }
  return assemble_partition(spec, realizers, placements, order, "realize_partitioned_mixed");
}

}  // namespace cnniep
