#include <gtest/gtest.h>

#include "fdomain/classical.hpp"
#include "oracles.hpp"

using namespace fdomain;

TEST(G2, Examples) {
  EXPECT_EQ(g2_classify({0.0, 0.0}).region, Region::Interior);
  const MembershipVerdict v = g2_classify({2.0, 1.0});
  EXPECT_EQ(v.region, Region::ClosureBoundary);
  ASSERT_TRUE(v.shilov.has_value());
  EXPECT_TRUE(*v.shilov);
  EXPECT_EQ(g2_classify({0.0, -0.25}).region, Region::Interior);
  EXPECT_EQ(g2_classify({3.0, 0.0}).region, Region::Outside);
}

TEST(G2, Roots) {
  auto [l1, l2] = g2_roots({0.0, -0.25});
  EXPECT_NEAR(std::abs(l1 - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(l2 + 0.5), 0.0, 1e-15);
  std::tie(l1, l2) = g2_roots({2.0, 1.0});
  EXPECT_NEAR(std::abs(l1 - 1.0), 0.0, 1e-8);
  EXPECT_NEAR(std::abs(l2 - 1.0), 0.0, 1e-8);
}

TEST(G2, RootsRoundTrip) {
  Rng rng(21);
  for (int i = 0; i < 1000; ++i) {
    const Complex u = complex_gaussian(rng), v = complex_gaussian(rng);
    const auto [l1, l2] = g2_roots({u + v, u * v});
    const double direct = std::abs(l1 - u) + std::abs(l2 - v);
    const double swapped = std::abs(l1 - v) + std::abs(l2 - u);
    EXPECT_LT(std::min(direct, swapped), 1e-9 * (1.0 + std::abs(u) + std::abs(v)));
  }
}

TEST(G2, MatchesSymmetrizedBidisc) {
  Rng rng(22);
  std::uniform_real_distribution<double> rad(0.0, 1.3);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
  for (int i = 0; i < 2000; ++i) {
    const Complex u = std::polar(rad(rng), ang(rng)), v = std::polar(rad(rng), ang(rng));
    const double m = 1.0 - std::max(std::abs(u), std::abs(v));
    if (std::abs(m) < 1e-6) continue;
    EXPECT_EQ(g2_classify({u + v, u * v}).interior(), m > 0.0);
  }
}

TEST(Tetra, Examples) {
  EXPECT_EQ(tetra_classify({0.0, 0.0, 0.0}).region, Region::Interior);
  const MembershipVerdict v = tetra_classify({1.0, 1.0, 1.0});
  EXPECT_EQ(v.region, Region::ClosureBoundary);
  EXPECT_TRUE(v.shilov.value_or(false));
  EXPECT_EQ(tetra_classify({0.0, 0.875, 0.0}).region, Region::Interior);
  EXPECT_EQ(tetra_classify({0.0, 0.0, 1.5}).region, Region::Outside);
}

TEST(Tetra, MatchesCircleOracle) {
  Rng rng(23);
  std::uniform_real_distribution<double> rad(0.0, 1.2);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
  int checked = 0;
  for (int i = 0; i < 1500; ++i) {
    const Complex x1 = std::polar(rad(rng), ang(rng)), x2 = std::polar(rad(rng), ang(rng));
    const Complex x3 = std::polar(rad(rng), ang(rng));
    if (std::abs(x1) >= 0.999) continue;
    const double m = 1.0 - oracle::tetra_circle_max(x1, x2, x3);
    if (std::abs(m) < 1e-3) continue;
    EXPECT_EQ(tetra_classify({x1, x2, x3}).interior(), m > 0.0) << x1 << x2 << x3;
    ++checked;
  }
  EXPECT_GT(checked, 500);
}

TEST(Tetra, ImagesOfContractionsAreInterior) {
  Rng rng(24);
  for (int i = 0; i < 2000; ++i) {
    const Matrix2 A = random_contraction(rng);
    if (operator_norm(A) > 1.0 - 1e-6) continue;
    EXPECT_TRUE(tetra_classify({A.a11, A.a22, A.det()}).interior());
  }
}

TEST(Penta, Examples) {
  EXPECT_EQ(penta_classify({0.0, 0.0, 0.0}).region, Region::Interior);
  EXPECT_EQ(penta_classify({0.875, 0.0, -0.25}).region, Region::Interior);
  const MembershipVerdict v = penta_classify({1.0, 0.0, 1.0});
  EXPECT_EQ(v.region, Region::ClosureBoundary);
  EXPECT_TRUE(v.shilov.value_or(false));
  EXPECT_EQ(penta_classify({1.1, 0.0, 0.0}).region, Region::Outside);
}

TEST(PentaSup, Examples) {
  EXPECT_NEAR(penta_sup({0.5, 0.0, 0.0}), 0.5, 1e-9);
  EXPECT_EQ(penta_sup({0.0, 0.3, 0.1}), 0.0);
  EXPECT_LT(penta_sup({0.875, 0.0, -0.25}), 1.0);
  EXPECT_THROW(penta_sup({0.5, 3.0, 0.0}), PreconditionViolation);
}

TEST(PentaSup, MatchesGridAndClosedForm) {
  Rng rng(25);
  std::uniform_real_distribution<double> rad(0.0, 0.95);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
  for (int i = 0; i < 40; ++i) {
    const Complex u = std::polar(rad(rng), ang(rng)), v = std::polar(rad(rng), ang(rng));
    const Complex a = std::polar(rad(rng), ang(rng));
    const Complex s = u + v, p = u * v;
    const double sup = penta_sup({a, s, p});
    const double grid = oracle::penta_grid_sup(a, s, p);
    EXPECT_LE(grid, sup + 1e-9);
    EXPECT_LT(sup - grid, 2e-2 * std::abs(a));
    EXPECT_NEAR(sup, oracle::penta_closed_sup(a, s, p), 1e-7 * std::max(1.0, sup));
  }
}

TEST(Penta, ImagesOfContractionsAreInterior) {
  Rng rng(26);
  for (int i = 0; i < 300; ++i) {
    const Matrix2 A = random_contraction(rng);
    if (operator_norm(A) > 1.0 - 1e-6) continue;
    EXPECT_TRUE(penta_classify({A.a21, A.trace(), A.det()}).interior());
  }
}
