#include "cnniep/centro.hpp"

#include <cmath>
#include <numbers>

#include "cnniep/errors.hpp"

namespace cnniep {

namespace {

void require_square_block(const DenseMatrix& m, std::size_t half, const char* name) {
  if (m.rows() != half || m.cols() != half) {
    throw DimensionMismatch(std::string("block ") + name + " must be " +
                            std::to_string(half) + "x" + std::to_string(half));
  }
}

// J * C: row i of the result is row (m-1-i) of C.
DenseMatrix j_times(const DenseMatrix& c) { return reverse_rows(c); }

}  // namespace

DenseMatrix exchange_reflect(const DenseMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  DenseMatrix out(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) out(i, j) = m(r - 1 - i, c - 1 - j);
  return out;
}

DenseMatrix reverse_rows(const DenseMatrix& m) {
  DenseMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(m.rows() - 1 - i, j);
  return out;
}

Vector reversed(std::span<const double> v) { return Vector(v.rbegin(), v.rend()); }

bool is_exchange_symmetric(std::span<const double> v) {
  for (std::size_t i = 0; i < v.size() / 2; ++i)
    if (v[i] != v[v.size() - 1 - i]) return false;
  return true;
}

CentroCheck is_centrosymmetric(const DenseMatrix& m, double tol) {
  const std::size_t n = m.order();
  double r = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      r = std::max(r, std::abs(m(i, j) - m(n - 1 - i, n - 1 - j)));
  return {r <= tol, r};
}

DenseMatrix centro_symmetrize(const DenseMatrix& m) {
  const std::size_t n = m.order();
  DenseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // Addition commutes bitwise, so (i,j) and its mirror get the same value.
      out(i, j) = 0.5 * (m(i, j) + m(n - 1 - i, n - 1 - j));
    }
  }
  return out;
}

DenseMatrix assemble(const CentroBlocksEven& b) {
  const std::size_t m = b.half;
  if (m == 0) throw DimensionMismatch("half order must be positive");
  require_square_block(b.a, m, "A");
  require_square_block(b.c, m, "C");
  const std::size_t n = 2 * m;
  DenseMatrix q(n, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      q(i, j) = b.a(i, j);
      q(m + i, j) = b.c(i, j);
      // JCJ and JAJ are the index-reversed copies.
      q(i, m + j) = b.c(m - 1 - i, m - 1 - j);
      q(m + i, m + j) = b.a(m - 1 - i, m - 1 - j);
    }
  }
  return q;
}

DenseMatrix assemble(const CentroBlocksOdd& b) {
  const std::size_t m = b.half;
  require_square_block(b.a, m, "A");
  require_square_block(b.c, m, "C");
  if (b.x.size() != m || b.y.size() != m) {
    throw DimensionMismatch("border vectors must have length " + std::to_string(m));
  }
  const std::size_t n = 2 * m + 1;
  DenseMatrix q(n, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      q(i, j) = b.a(i, j);
      q(m + 1 + i, j) = b.c(i, j);
      q(i, m + 1 + j) = b.c(m - 1 - i, m - 1 - j);
      q(m + 1 + i, m + 1 + j) = b.a(m - 1 - i, m - 1 - j);
    }
    q(i, m) = b.x[i];
    q(m + 1 + i, m) = b.x[m - 1 - i];
    q(m, i) = b.y[i];
    q(m, m + 1 + i) = b.y[m - 1 - i];
  }
  q(m, m) = b.p;
  return q;
}

DenseMatrix assemble(const CentroBlocks& blocks) {
  return std::visit([](const auto& b) { return assemble(b); }, blocks);
}

CentroBlocks split(const DenseMatrix& q_in, double tol) {
  const std::size_t n = q_in.order();
  if (n == 0) throw DimensionMismatch("empty matrix");
  const CentroCheck check = is_centrosymmetric(q_in, tol);
  if (!check.ok) {
    throw NotCentrosymmetric("matrix is not centrosymmetric", check.residual);
  }
  const DenseMatrix q = check.residual == 0.0 ? q_in : centro_symmetrize(q_in);
  const std::size_t m = n / 2;
  if (n % 2 == 0) {
    return CentroBlocksEven{m, q.block(0, 0, m, m), q.block(m, 0, m, m)};
  }
  CentroBlocksOdd b;
  b.half = m;
  b.a = q.block(0, 0, m, m);
  b.c = q.block(m + 1, 0, m, m);
  b.x.resize(m);
  b.y.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    b.x[i] = q(i, m);
    b.y[i] = q(m, i);
  }
  b.p = q(m, m);
  return b;
}

SplitPair block_diagonalize(const DenseMatrix& q, double tol) {
  const CentroBlocks blocks = split(q, tol);
  if (const auto* even = std::get_if<CentroBlocksEven>(&blocks)) {
    const DenseMatrix jc = j_times(even->c);
    return {even->a - jc, even->a + jc};
  }
  const auto& odd = std::get<CentroBlocksOdd>(blocks);
  const std::size_t m = odd.half;
  const DenseMatrix jc = j_times(odd.c);
  const DenseMatrix plus = odd.a + jc;
  DenseMatrix bordered(m + 1, m + 1);
  bordered(0, 0) = odd.p;
  for (std::size_t i = 0; i < m; ++i) {
    bordered(0, 1 + i) = std::numbers::sqrt2 * odd.y[i];
    bordered(1 + i, 0) = std::numbers::sqrt2 * odd.x[i];
  }
  bordered.set_block(1, 1, plus);
  return {odd.a - jc, bordered};
}

DenseMatrix from_split(const SplitPair& parts) {
  const std::size_t m = parts.minus.order();
  const std::size_t pn = parts.plus_part.order();
  if (pn != m && pn != m + 1) {
    throw DimensionMismatch("plus part must have the order of the minus part, or one more");
  }
  const bool odd = pn == m + 1;
  const DenseMatrix plus = odd ? parts.plus_part.block(1, 1, m, m) : parts.plus_part;
  DenseMatrix a(m, m);
  DenseMatrix jc(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      a(i, j) = 0.5 * (plus(i, j) + parts.minus(i, j));
      jc(i, j) = 0.5 * (plus(i, j) - parts.minus(i, j));
    }
  }
  DenseMatrix c = j_times(jc);
  if (!odd) {
    if (m == 0) throw DimensionMismatch("empty parts");
    return assemble(CentroBlocksEven{m, std::move(a), std::move(c)});
  }
  CentroBlocksOdd b;
  b.half = m;
  b.a = std::move(a);
  b.c = std::move(c);
  b.x.resize(m);
  b.y.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    b.x[i] = parts.plus_part(1 + i, 0) / std::numbers::sqrt2;
    b.y[i] = parts.plus_part(0, 1 + i) / std::numbers::sqrt2;
  }
  b.p = parts.plus_part(0, 0);
  return assemble(b);
}

}  // namespace cnniep
