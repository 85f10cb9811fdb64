#include <gtest/gtest.h>

#include <numeric>

#include "cnniep/centro.hpp"
#include "cnniep/errors.hpp"
#include "test_support.hpp"

using namespace cnniep;
using testing_support::Rng;

namespace {

DenseMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, double lo = -3, double hi = 3) {
  DenseMatrix m(r, c);
  for (double& x : m.entries()) x = rng.uniform(lo, hi);
  return m;
}

Vector random_vector(Rng& rng, std::size_t n) {
  Vector v(n);
  for (double& x : v) x = rng.uniform(-3, 3);
  return v;
}

CentroBlocks random_blocks(Rng& rng, std::size_t order) {
  const std::size_t half = order / 2;
  if (order % 2 == 0) return CentroBlocksEven{half, random_matrix(rng, half, half), random_matrix(rng, half, half)};
  return CentroBlocksOdd{half, random_matrix(rng, half, half), random_matrix(rng, half, half),
                         random_vector(rng, half), random_vector(rng, half), rng.uniform(-3, 3)};
}

}  // namespace

TEST(DenseMatrix, ArithmeticAndShape) {
  const DenseMatrix a{{1, 2}, {3, 4}};
  const DenseMatrix b{{0, 1}, {1, 0}};
  EXPECT_EQ(a * b, (DenseMatrix{{2, 1}, {4, 3}}));
  EXPECT_EQ(a + b, (DenseMatrix{{1, 3}, {4, 4}}));
  EXPECT_EQ(a.transpose(), (DenseMatrix{{1, 3}, {2, 4}}));
  EXPECT_EQ(2.0 * a, (DenseMatrix{{2, 4}, {6, 8}}));
  EXPECT_EQ(a.order(), 2u);
  EXPECT_THROW(DenseMatrix(2, 3).order(), DimensionMismatch);
  EXPECT_THROW(a * DenseMatrix(3, 3), DimensionMismatch);
  const Vector v{1, 1};
  EXPECT_EQ(a * std::span<const double>(v), (Vector{3, 7}));
}

TEST(DenseMatrix, PermuteSymmetricMovesRowsAndColumns) {
  const DenseMatrix m{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  const std::size_t perm[] = {2, 0, 1};
  EXPECT_EQ(permute_symmetric(m, perm), (DenseMatrix{{9, 7, 8}, {3, 1, 2}, {6, 4, 5}}));
  const std::size_t bad[] = {0, 0, 1};
  EXPECT_THROW(permute_symmetric(m, bad), InvalidArgument);
}

TEST(Centro, ExchangeReflectReversesBothIndices) {
  const DenseMatrix m{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  EXPECT_EQ(exchange_reflect(m), (DenseMatrix{{9, 8, 7}, {6, 5, 4}, {3, 2, 1}}));
  EXPECT_EQ(reverse_rows(m), (DenseMatrix{{7, 8, 9}, {4, 5, 6}, {1, 2, 3}}));
  EXPECT_TRUE(is_exchange_symmetric(Vector{1, 2, 1}));
  EXPECT_FALSE(is_exchange_symmetric(Vector{1, 2, 3}));
}

TEST(Centro, AssembleEvenMatchesBlockLayout) {
  // [[A, JCJ], [C, JAJ]] with A = [[1,2],[3,4]], C = [[5,6],[7,8]].
  const CentroBlocksEven b{2, DenseMatrix{{1, 2}, {3, 4}}, DenseMatrix{{5, 6}, {7, 8}}};
  const DenseMatrix q = assemble(b);
  EXPECT_EQ(q, (DenseMatrix{{1, 2, 8, 7}, {3, 4, 6, 5}, {5, 6, 4, 3}, {7, 8, 2, 1}}));
  EXPECT_EQ(testing_support::centro_residual(q), 0.0);
}

TEST(Centro, AssembleOddMatchesBlockLayout) {
  const CentroBlocksOdd b{1, DenseMatrix{{1}}, DenseMatrix{{2}}, Vector{3}, Vector{4}, 5};
  EXPECT_EQ(assemble(b), (DenseMatrix{{1, 3, 2}, {4, 5, 4}, {2, 3, 1}}));
}

TEST(Centro, SplitInvertsAssemble) {
  Rng rng(11);
  for (std::size_t order = 2; order <= 9; ++order) {
    const CentroBlocks blocks = random_blocks(rng, order);
    const DenseMatrix q = assemble(blocks);
    EXPECT_EQ(testing_support::centro_residual(q), 0.0);
    EXPECT_EQ(split(q), blocks) << "order " << order;
    EXPECT_EQ(from_split(block_diagonalize(q)).rows(), order);
    EXPECT_LE(max_abs_diff(from_split(block_diagonalize(q)), q), 1e-14);
  }
}

TEST(Centro, SplitRejectsNonCentrosymmetric) {
  const DenseMatrix m{{1, 2}, {3, 4}};
  try {
    split(m);
    FAIL() << "expected NotCentrosymmetric";
  } catch (const NotCentrosymmetric& e) {
    EXPECT_DOUBLE_EQ(e.residual(), 3.0);
  }
}

TEST(Centro, SplitSymmetrizesTinyResiduals) {
  DenseMatrix q = assemble(CentroBlocksEven{1, DenseMatrix{{2}}, DenseMatrix{{1}}});
  q(0, 0) += 1e-14;
  const auto b = std::get<CentroBlocksEven>(split(q));
  EXPECT_NEAR(b.a(0, 0), 2.0, 1e-14);
}

TEST(Centro, CentroSymmetrizeGivesBitwiseMirrors) {
  Rng rng(5);
  const DenseMatrix m = random_matrix(rng, 7, 7);
  EXPECT_EQ(testing_support::centro_residual(centro_symmetrize(m)), 0.0);
}

TEST(Centro, BlockDiagonalizeExample) {
  // Order-6 matrix from circulant plus/minus parts: minus has diagonal -1/3
  // and plus has diagonal 7.
  const double s3 = std::numbers::sqrt3;
  const DenseMatrix plus{{7, (12 + 4 * s3) / 3, (12 - 4 * s3) / 3},
                         {(12 - 4 * s3) / 3, 7, (12 + 4 * s3) / 3},
                         {(12 + 4 * s3) / 3, (12 - 4 * s3) / 3, 7}};
  const DenseMatrix minus{{-1.0 / 3, (-1 + 2 * s3) / 3, (-1 - 2 * s3) / 3},
                          {(-1 - 2 * s3) / 3, -1.0 / 3, (-1 + 2 * s3) / 3},
                          {(-1 + 2 * s3) / 3, (-1 - 2 * s3) / 3, -1.0 / 3}};
  const DenseMatrix q = from_split({minus, plus});
  const SplitPair back = block_diagonalize(q);
  EXPECT_LE(max_abs_diff(back.plus_part, plus), 1e-14);
  EXPECT_LE(max_abs_diff(back.minus, minus), 1e-14);
}

TEST(Centro, OddBorderUsesSqrtTwo) {
  const CentroBlocksOdd b{1, DenseMatrix{{1}}, DenseMatrix{{2}}, Vector{3}, Vector{4}, 5};
  const SplitPair s = block_diagonalize(assemble(b));
  EXPECT_DOUBLE_EQ(s.minus(0, 0), 1.0 - 2.0);
  EXPECT_DOUBLE_EQ(s.plus_part(0, 0), 5.0);
  EXPECT_DOUBLE_EQ(s.plus_part(0, 1), std::numbers::sqrt2 * 4.0);
  EXPECT_DOUBLE_EQ(s.plus_part(1, 0), std::numbers::sqrt2 * 3.0);
  EXPECT_DOUBLE_EQ(s.plus_part(1, 1), 1.0 + 2.0);
}

// The spectrum of Q is the union of the spectra of its two diagonal blocks.
TEST(Centro, BlockDiagonalizationPreservesSpectrum) {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t order = static_cast<std::size_t>(rng.integer(2, 12));
    const DenseMatrix q = assemble(random_blocks(rng, order));
    const SplitPair s = block_diagonalize(q);
    auto parts = testing_support::oracle_eigenvalues(s.minus);
    const auto plus = testing_support::oracle_eigenvalues(s.plus_part);
    parts.insert(parts.end(), plus.begin(), plus.end());
    EXPECT_LE(testing_support::multiset_distance(testing_support::oracle_eigenvalues(q), parts), 1e-8)
        << "order " << order;
  }
}

// Normality splits across the blocks.
TEST(Centro, NormalIffBothBlocksNormal) {
  const DenseMatrix rot{{1, -2}, {2, 1}};
  const DenseMatrix sym{{3, 1}, {1, 3}};
  const DenseMatrix q = from_split({rot, sym});
  EXPECT_LE(testing_support::normality_residual(q), 1e-15);
  const DenseMatrix skewed{{1, 5}, {0, 1}};
  EXPECT_GT(testing_support::normality_residual(from_split({skewed, sym})), 1e-3);
}
