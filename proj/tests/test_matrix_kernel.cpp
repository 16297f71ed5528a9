#include <gtest/gtest.h>

#include <array>

#include "fdomain/matrix2.hpp"
#include "oracles.hpp"

using namespace fdomain;

TEST(OperatorNorm, Identity) { EXPECT_DOUBLE_EQ(operator_norm(Matrix2::identity()), 1.0); }

TEST(OperatorNorm, ScaledRotation) {
  const Matrix2 A{0.0, 0.5, -0.5, 0.0};
  EXPECT_NEAR(operator_norm(A), 0.5, 1e-15);
}

TEST(OperatorNorm, MatchesPowerIteration) {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Matrix2 A = random_gaussian_matrix(rng);
    const double ref = oracle::power_norm(A);
    EXPECT_NEAR(operator_norm(A), ref, 1e-12 * std::max(1.0, ref));
  }
}

TEST(OperatorNorm, SingularValuesMultiplyToDet) {
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const Matrix2 A = random_gaussian_matrix(rng);
    const auto sv = singular_values(A);
    EXPECT_GE(sv[0], sv[1]);
    EXPECT_NEAR(sv[0] * sv[1], std::abs(A.det()), 1e-12 * std::max(1.0, sv[0] * sv[0]));
  }
}

TEST(SpectralRadius, Examples) {
  EXPECT_DOUBLE_EQ(spectral_radius(Matrix2::diag(0.5, 0.25)), 0.5);
  EXPECT_DOUBLE_EQ(spectral_radius(Matrix2::e12()), 0.0);
}

TEST(SpectralRadius, MatchesRootsAndGelfand) {
  Rng rng(13);
  for (int i = 0; i < 500; ++i) {
    const Matrix2 A = random_gaussian_matrix(rng);
    const double rho = spectral_radius(A);
    EXPECT_NEAR(rho, oracle::naive_radius(A), 1e-10 * std::max(1.0, rho));
    EXPECT_NEAR(rho, oracle::gelfand_radius(A), 1e-6 * std::max(1.0, rho));
  }
}

TEST(GramReport, ZeroMatrix) {
  const GramReport g = gram_report(Matrix2::zero());
  EXPECT_DOUBLE_EQ(g.det_gram, 1.0);
  EXPECT_DOUBLE_EQ(g.trace_gram, 2.0);
  EXPECT_DOUBLE_EQ(g.norm, 0.0);
}

TEST(GramReport, CounterexamplePointAtHalf) {
  // coordinates (x, a, p, s) = (0, 7/8, 1/4, 0); off-diagonal entries are the roots of t^2 - 1/4
  const Matrix2 B{0.0, 0.5, -0.5, 0.875};
  EXPECT_NEAR(B.det().real(), 0.25, 1e-15);
  const double r = 0.5;
  const double expected = std::pow(1 - r * r, 2) - std::pow(1 - r * r / 2, 2);
  EXPECT_NEAR(expected, -13.0 / 64.0, 1e-15);
  EXPECT_NEAR(gram_report(B).det_gram, expected, 1e-12);
}

TEST(GramReport, Unitary) {
  Rng rng(14);
  for (int i = 0; i < 50; ++i) {
    const GramReport g = gram_report(random_unitary(rng));
    EXPECT_NEAR(g.det_gram, 0.0, 1e-12);
    EXPECT_NEAR(g.trace_gram, 0.0, 1e-12);
    EXPECT_NEAR(g.norm, 1.0, 1e-12);
  }
}

TEST(GramReport, ClosedFormMatchesDirect) {
  Rng rng(15);
  for (int i = 0; i < 20000; ++i) {
    const Matrix2 B = random_gaussian_matrix(rng);
    const double direct = (Matrix2::identity() - B.adjoint() * B).det().real();
    const double closed = gram_det_closed_form(B.a11, B.a22, B.det(), B.a12 + B.a21);
    EXPECT_NEAR(direct, closed, 1e-10 * std::max(1.0, B.frobenius2() * B.frobenius2()));
  }
}

TEST(GramReport, RejectsNonFinite) {
  const Matrix2 B{std::nan(""), 0.0, 0.0, 0.0};
  EXPECT_THROW(gram_report(B), PreconditionViolation);
}

TEST(ContractionTest, Examples) {
  EXPECT_TRUE(contraction_test(Matrix2::diag(0.5, 0.5), true));
  const Matrix2 U = random_unitary(3ULL);
  EXPECT_TRUE(contraction_test(U, false));
  EXPECT_FALSE(contraction_test(U, true));
}

TEST(ContractionTest, AgreesWithNormWhenDetBelowOne) {
  Rng rng(16);
  std::uniform_real_distribution<double> scale(0.2, 1.6);
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    const Matrix2 B = scale(rng) * random_contraction(rng);
    if (std::abs(B.det()) >= 1.0) continue;
    const double n = oracle::power_norm(B);
    if (std::abs(n - 1.0) < 1e-7) continue;
    EXPECT_EQ(contraction_test(B, true), n < 1.0) << n;
    EXPECT_EQ(contraction_test(B, false), n <= 1.0) << n;
    ++checked;
  }
  EXPECT_GT(checked, 5000);
}

TEST(ContractionTest, RejectsLargeDeterminant) {
  EXPECT_THROW(contraction_test(Matrix2::diag(2.0, 2.0), true), PreconditionViolation);
}

TEST(RandomMatrices, ContractionBySeed) {
  EXPECT_LT(operator_norm(random_contraction(0ULL)), 1.0);
  EXPECT_EQ(random_contraction(0ULL), random_contraction(0ULL));
  EXPECT_EQ(random_unitary(5ULL), random_unitary(5ULL));
  EXPECT_NE(random_unitary(5ULL), random_unitary(6ULL));
}

TEST(RandomMatrices, NormHistogramCoversUnitInterval) {
  std::array<int, 10> bins{};
  for (unsigned long long seed = 0; seed < 1000; ++seed) {
    const double n = oracle::power_norm(random_contraction(seed));
    ASSERT_LT(n, 1.0);
    ++bins[static_cast<std::size_t>(n * 10.0)];
  }
  // the largest of two uniforms has density 2t; every decile must be hit
  for (int b : bins) EXPECT_GT(b, 0);
}

TEST(RandomMatrices, UnitaryIsUnitary) {
  Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const Matrix2 U = random_unitary(rng);
    EXPECT_LT(max_abs_diff(U.adjoint() * U, Matrix2::identity()), 1e-14);
  }
}
