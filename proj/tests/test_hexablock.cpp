#include <gtest/gtest.h>

#include "fdomain/hexablock.hpp"
#include "oracles.hpp"

using namespace fdomain;

TEST(PsiEval, Examples) {
  EXPECT_NEAR(std::abs(psi_eval({0.0, 0.0}, {0.5, 0.0, 0.0, 0.0}) - 0.5), 0.0, 1e-15);
  EXPECT_EQ(psi_eval({0.3, Complex{0.1, 0.2}}, {0.0, 0.2, 0.1, 0.0}), Complex{0.0});
  const PointH pt{0.5, 0.2, 0.1, 0.0};
  EXPECT_LT(std::abs(psi_eval({1.0 - 1e-12, 0.0}, pt)), 1e-5);
  EXPECT_THROW(psi_eval({1.0, 0.0}, pt), PreconditionViolation);
}

TEST(PsiSup, Examples) {
  EXPECT_NEAR(psi_sup({0.5, 0.0, 0.0, 0.0}), 0.5, 1e-9);
  EXPECT_EQ(psi_sup({0.0, 0.3, 0.2, 0.05}), 0.0);
  for (int k = 1; k <= 9; ++k) {
    const Complex a = std::polar(0.1 * k, 0.3 * k);
    EXPECT_NEAR(psi_sup({a, 0.0, 0.0, 0.0}), 0.1 * k, 1e-6);
  }
  EXPECT_THROW(psi_sup({0.5, 0.0, 0.0, 1.5}), PreconditionViolation);
}

TEST(PsiSup, DominatesBidiscGrid) {
  Rng rng(51);
  for (int i = 0; i < 8; ++i) {
    const Matrix2 A = random_contraction(rng);
    const PointH pt = pi_hexa(A);
    if (!tetra_classify({pt.x1, pt.x2, pt.x3}).interior()) continue;
    const double sup = psi_sup(pt);
    const double grid = oracle::psi_grid_sup(pt.a, pt.x1, pt.x2, pt.x3);
    EXPECT_LE(grid, sup + 1e-9);
    EXPECT_LT(sup - grid, 5e-2);
    EXPECT_LT(sup, 1.0);
  }
}

TEST(HexaClassify, Examples) {
  EXPECT_EQ(hexa_classify({0.0, 0.0, 0.875, 0.0}).verdict.region, Region::Interior);
  const HexaVerdict h = hexa_classify({0.5, 0.0, 0.0, 0.0});
  EXPECT_EQ(h.verdict.region, Region::Interior);
  ASSERT_TRUE(h.sup.has_value());
  EXPECT_NEAR(*h.sup, 0.5, 1e-9);
  const HexaVerdict out = hexa_classify({2.0, 0.0, 0.0, 0.0});
  EXPECT_EQ(out.verdict.region, Region::Outside);
  EXPECT_NEAR(out.sup.value_or(0.0), 2.0, 1e-8);
}

TEST(HexaClassify, SliceAtZeroIsTetrablock) {
  Rng rng(52);
  std::uniform_real_distribution<double> u(-1.2, 1.2);
  for (int i = 0; i < 1000; ++i) {
    const PointTetra t{Complex{u(rng), u(rng)}, Complex{u(rng), u(rng)}, Complex{u(rng), u(rng)}};
    EXPECT_EQ(hexa_classify({0.0, t.x1, t.x2, t.x3}).verdict.region, tetra_classify(t).region);
  }
}

TEST(HN, Examples) {
  EXPECT_FALSE(hn_classify({0.0, 0.0, 0.0, 0.25}).in_open);
  Rng rng(53);
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  for (int i = 0; i < 100; ++i) {
    const Complex x1{u(rng), u(rng)}, x2{u(rng), u(rng)};
    EXPECT_TRUE(hn_classify({0.0, x1, x2, x1 * x2}).in_open);
  }
}

TEST(HN, ImagesOfContractions) {
  Rng rng(54);
  for (int i = 0; i < 2000; ++i) {
    const Matrix2 A = random_contraction(rng);
    if (operator_norm(A) > 1.0 - 1e-6) continue;
    const HNVerdict v = hn_classify(pi_hexa(A));
    EXPECT_TRUE(v.in_open);
    EXPECT_TRUE(v.in_closure);
  }
}

TEST(HN, ReconstructionAgreesWithNorm) {
  Rng rng(55);
  std::uniform_real_distribution<double> target(0.0, 2.0);
  for (int i = 0; i < 2000; ++i) {
    const double t = target(rng);
    if (std::abs(t - 1.0) < 1e-6) continue;
    const Matrix2 A = oracle::with_norm(rng, t);
    const HNVerdict v = hn_classify(pi_hexa(A));
    EXPECT_EQ(v.in_open, t < 1.0);
    EXPECT_EQ(v.in_closure, t < 1.0);
    EXPECT_LT(max_abs_diff(hn_reconstruct_matrix(pi_hexa(A)), A), 1e-9 * std::max(1.0, 1.0 / std::abs(A.a21)));
  }
}

TEST(ShilovH, Examples) {
  Rng rng(56);
  for (int i = 0; i < 100; ++i) EXPECT_TRUE(shilov_h_test(pi_hexa(random_unitary(rng))));
  EXPECT_FALSE(shilov_h_test({0.0, 0.0, 0.0, 0.25}));
  EXPECT_FALSE(shilov_h_test({0.5, 0.0, 0.0, 0.0}));
}
