#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cnniep/constructors.hpp"
#include "cnniep/errors.hpp"
#include "cnniep/spectral.hpp"
#include "test_support.hpp"

using namespace cnniep;
using testing_support::multiset_distance;
using testing_support::oracle_eigenvalues;
using testing_support::Rng;

namespace {

const DenseMatrix kQ2{{4, 1.5, 4.5, 0}, {4.5, 4, 0, 1.5}, {1.5, 0, 4, 4.5}, {0, 4.5, 1.5, 4}};

const std::vector<Complex> kQ2Spectrum{{10, 0}, {-2, 0}, {4, 3}, {4, -3}};

DenseMatrix random_matrix(Rng& rng, std::size_t n) {
  DenseMatrix m(n, n);
  for (double& x : m.entries()) x = rng.uniform(-5, 5);
  return m;
}

DenseMatrix random_nonneg_centro(Rng& rng, std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.uniform(0.01, 4);
  return centro_symmetrize(m);
}

}  // namespace

TEST(Eigenvalues, MatchesKnownSpectra) {
  EXPECT_LE(multiset_distance(eigenvalues(kQ2), kQ2Spectrum), 1e-12);
  EXPECT_LE(multiset_distance(eigenvalues(DenseMatrix::identity(3)), {1.0, 1.0, 1.0}), 1e-15);
  const DenseMatrix cycle{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}};
  const std::vector<Complex> roots{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  EXPECT_LE(multiset_distance(eigenvalues(cycle), roots), 1e-12);
}

TEST(Eigenvalues, AgreesWithOracleOnRandomMatrices) {
  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 30));
    const DenseMatrix m = random_matrix(rng, n);
    const auto ours = eigenvalues(m);
    ASSERT_EQ(ours.size(), n);
    EXPECT_LE(multiset_distance(ours, oracle_eigenvalues(m)), 1e-8 * (1.0 + m.frobenius_norm()))
        << "order " << n;
  }
}

TEST(Eigenvalues, ConjugatePairsAreExact) {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto ours = eigenvalues(random_matrix(rng, 12));
    for (const Complex& z : ours) {
      if (z.imag() == 0.0) continue;
      const auto partner = std::find(ours.begin(), ours.end(), std::conj(z));
      EXPECT_NE(partner, ours.end());
    }
  }
}

// Circulant eigenvalues are the DFT of the first row: lambda_k = sum_j c_j w^(jk).
TEST(Eigenvalues, CirculantSpectraMatchDft) {
  Rng rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(2, 15));
    Vector row(n);
    for (double& x : row) x = rng.uniform(-2, 2);
    std::vector<Complex> dft;
    for (std::size_t k = 0; k < n; ++k) {
      Complex sum = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        sum += row[j] * std::polar(1.0, 2 * std::numbers::pi * double(j * k) / double(n));
      dft.push_back(sum);
    }
    EXPECT_LE(multiset_distance(eigenvalues(circulant(row)), dft), 1e-8);
  }
}

TEST(Eigenvalues, RejectsNonSquare) {
  EXPECT_THROW(eigenvalues(DenseMatrix(2, 3)), DimensionMismatch);
}

TEST(PerronData, CirculantPairHasUniformVector) {
  const std::vector<Complex> pairs{{3, 4}, {0, 2}};
  const Realization r = realize_circulant_pair(15, -1, pairs);
  const PerronData p = perron_data(r.matrix);
  EXPECT_NEAR(p.root, 15.0, 1e-10);
  for (double x : p.vector) EXPECT_NEAR(x, 1.0 / std::sqrt(6.0), 1e-10);
}

TEST(PerronData, ZeroMatrix) {
  const PerronData p = perron_data(DenseMatrix{{0}});
  EXPECT_EQ(p.root, 0.0);
  EXPECT_EQ(p.vector, Vector{1.0});
}

TEST(PerronData, RandomCentrosymmetricResidual) {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 12));
    const DenseMatrix q = random_nonneg_centro(rng, n);
    const PerronData p = perron_data(q);
    const Vector qv = q * std::span<const double>(p.vector);
    double res = 0.0, norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      res = std::max(res, std::abs(qv[i] - p.root * p.vector[i]));
      norm += p.vector[i] * p.vector[i];
      EXPECT_GE(p.vector[i], 0.0);
      EXPECT_EQ(p.vector[i], p.vector[n - 1 - i]);
    }
    EXPECT_LE(res, 1e-9);
    EXPECT_NEAR(norm, 1.0, 1e-12);
    double radius = 0.0;
    for (const Complex& z : oracle_eigenvalues(q)) radius = std::max(radius, std::abs(z));
    EXPECT_NEAR(p.root, radius, 1e-10 * radius);
  }
}

TEST(PerronData, HandlesMinusRootTie) {
  // The 2-cycle has eigenvalues 1 and -1; the shift keeps iteration convergent.
  const PerronData p = perron_data(DenseMatrix{{0, 1}, {1, 0}});
  EXPECT_NEAR(p.root, 1.0, 1e-12);
  EXPECT_NEAR(p.vector[0], std::sqrt(0.5), 1e-12);
}

TEST(PerronData, RequiresCentrosymmetryByDefault) {
  EXPECT_THROW(perron_data(DenseMatrix{{1, 2}, {0, 1}}), NotCentrosymmetric);
  PowerIterationOptions opts;
  opts.exchange_symmetric = false;
  const PerronData p = perron_data(DenseMatrix{{2, 1}, {1, 1}}, opts);
  EXPECT_NEAR(p.root, (3 + std::sqrt(5.0)) / 2, 1e-10);
}

TEST(Normality, Examples) {
  EXPECT_TRUE(is_normal(kQ2).ok);
  EXPECT_TRUE(is_normal(DenseMatrix{{1, 2}, {2, 7}}).ok);
  const NormalityCheck bad = is_normal(DenseMatrix{{0, 1}, {0, 0}});
  EXPECT_FALSE(bad.ok);
  EXPECT_GT(bad.residual, 0.0);
  EXPECT_NEAR(bad.residual, testing_support::normality_residual(DenseMatrix{{0, 1}, {0, 0}}), 1e-15);
}

TEST(Nonnegativity, Examples) {
  EXPECT_TRUE(is_nonnegative(kQ2).ok);
  EXPECT_TRUE(is_nonnegative(DenseMatrix(3, 3)).ok);
  const NonnegativityCheck neg = is_nonnegative(DenseMatrix{{-1}});
  EXPECT_FALSE(neg.ok);
  EXPECT_EQ(neg.most_negative, -1.0);
  EXPECT_TRUE(is_nonnegative(DenseMatrix{{-1e-13}}).ok);
}

TEST(Normalize, SplitsPerronRealsAndPairs) {
  const std::vector<Complex> v{{20, 0}, {-1, 0}, {-2, 0}, {-3, 0}, {3, 4}, {3, -4}, {0, 2}, {0, -2}};
  const Spectrum s = Spectrum::normalize(v);
  EXPECT_EQ(s.perron, 20.0);
  EXPECT_EQ(s.reals, (std::vector<double>{-1, -2, -3}));
  EXPECT_EQ(s.pairs, (std::vector<Complex>{{3, 4}, {0, 2}}));
  EXPECT_EQ(s.size(), 8u);
}

TEST(Normalize, SingletonAndErrors) {
  const std::vector<Complex> one{{5, 0}};
  const Spectrum s = Spectrum::normalize(one);
  EXPECT_EQ(s.perron, 5.0);
  EXPECT_TRUE(s.reals.empty());
  EXPECT_TRUE(s.pairs.empty());
  const std::vector<Complex> lonely{{1, 0}, {0, 1}};
  EXPECT_THROW(Spectrum::normalize(lonely), NotSelfConjugate);
  const std::vector<Complex> too_big{{1, 0}, {0, 2}, {0, -2}};
  EXPECT_THROW(Spectrum::normalize(too_big), PerronViolation);
  const std::vector<Complex> no_real{{0, 1}, {0, -1}};
  EXPECT_THROW(Spectrum::normalize(no_real), PerronViolation);
  // A pair whose imaginary part vanishes is two reals, not a pair.
  const std::vector<Complex> flat_pair{{3, 0}, {1, 1e-12}, {1, -1e-12}};
  EXPECT_TRUE(Spectrum::normalize(flat_pair).pairs.empty());
}

TEST(MatchSpectra, Examples) {
  EXPECT_LE(match_spectra(eigenvalues(kQ2), kQ2Spectrum, 1e-8).max_distance, 1e-8);
  EXPECT_EQ(match_spectra(kQ2Spectrum, kQ2Spectrum, 0.0).max_distance, 0.0);
  const std::vector<Complex> a{1.0, 2.0}, b{1.0, 3.0};
  const SpectrumMatch m = match_spectra(a, b, 1e-6);
  EXPECT_FALSE(m.ok);
  EXPECT_DOUBLE_EQ(m.max_distance, 1.0);
  const std::vector<Complex> c{1.0};
  EXPECT_THROW(match_spectra(a, c, 1.0), DimensionMismatch);
}

TEST(MatchSpectra, AgreesWithExactMatchingOnPerturbedLists) {
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const Spectrum s{rng.uniform(20, 30), rng.negative_reals(3), rng.pairs(3)};
    const auto target = s.values();
    std::vector<Complex> noisy;
    for (const Complex& z : target) {
      const Complex e(rng.uniform(-1e-9, 1e-9), z.imag() == 0.0 ? 0.0 : rng.uniform(-1e-9, 1e-9));
      noisy.push_back(z + e);
    }
    std::shuffle(noisy.begin(), noisy.end(), rng.engine());
    const double exact = multiset_distance(noisy, target);
    EXPECT_LE(match_spectra(noisy, target, 1e-8).max_distance, 1e-8);
    EXPECT_GE(match_spectra(noisy, target, 1e-8).max_distance, exact - 1e-15);
  }
}

TEST(Verify, Examples) {
  const std::vector<Complex> eight{{20, 0}, {-1, 0}, {-2, 0}, {-3, 0}, {3, 4}, {3, -4}, {0, 2}, {0, -2}};
  EXPECT_TRUE(verify_realization(testing_support::golden_eight(), eight).pass);
  const std::vector<Complex> ones(3, 1.0);
  EXPECT_TRUE(verify_realization(DenseMatrix::identity(3), ones).pass);
  const std::vector<Complex> off{{10, 0}, {-2, 0}, {4, 2}, {4, -2}};
  const VerificationReport r = verify_realization(kQ2, off);
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.spectrum_ok);
  EXPECT_TRUE(r.centro_ok && r.nonneg_ok && r.normal_ok);
  EXPECT_NEAR(r.spectrum_max_mismatch, 1.0, 1e-10);
}

TEST(Verify, ReportsEachFailure) {
  const DenseMatrix m{{-1, 1}, {0, 2}};
  const std::vector<Complex> target{-1.0, 2.0};
  const VerificationReport r = verify_realization(m, target);
  EXPECT_FALSE(r.centro_ok);
  EXPECT_FALSE(r.nonneg_ok);
  EXPECT_FALSE(r.normal_ok);
  EXPECT_TRUE(r.spectrum_ok);
  EXPECT_FALSE(r.pass);
  const std::vector<Complex> short_target{2.0};
  EXPECT_TRUE(std::isinf(verify_realization(m, short_target).spectrum_max_mismatch));
}
