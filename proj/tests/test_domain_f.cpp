#include <gtest/gtest.h>

#include "fdomain/domain_f.hpp"
#include "oracles.hpp"

using namespace fdomain;

namespace {

bool near(const PointF& u, const PointF& v, double tol) { return distance(u, v) <= tol; }

}  // namespace

TEST(PiF, Examples) {
  EXPECT_TRUE(near(pi_F({0.0, 0.5, -0.5, 0.0}), {0.0, 0.0, 0.25, 0.0}, 1e-15));
  EXPECT_EQ(pi_F(Matrix2::identity()), (PointF{1.0, 1.0, 1.0, 0.0}));
  EXPECT_EQ(pi_F(Matrix2::zero()), PointF{});
}

TEST(FClassify, Examples) {
  EXPECT_EQ(f_classify({0.0, 0.875, 0.25, 0.0}).region, Region::Outside);
  EXPECT_NEAR(criteria::f_quadratic(0.0, 0.875, 0.25, 0.0), -13.0 / 64.0, 1e-12);
  EXPECT_EQ(f_classify({0.0, 0.5, 0.0, 1.0}).region, Region::Outside);
  EXPECT_NEAR(criteria::f_quadratic(0.0, 0.5, 0.0, 1.0), -0.25, 1e-12);
  EXPECT_EQ(f_classify({0.0, 0.0, 0.25, 0.0}).region, Region::Interior);
}

TEST(FClassify, MatrixOracleExamples) {
  EXPECT_EQ(f_classify_matrix_oracle({0.0, 0.0, 0.25, 0.0}).region, Region::Interior);
  EXPECT_NEAR(operator_norm(f_reconstruct_matrix({0.0, 0.0, 0.25, 0.0})), 0.5, 1e-15);
  EXPECT_EQ(f_classify_matrix_oracle({1.0, 1.0, 1.0, 0.0}).region, Region::ClosureBoundary);
}

TEST(FClassify, AgreesWithMatrixOracleOnBox) {
  Rng rng(31);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto c = [&](double r) { return Complex{r * u(rng), r * u(rng)}; };
  for (int i = 0; i < 10000; ++i) {
    const PointF pt{c(1.2), c(1.2), c(1.2), c(2.2)};
    const double n = oracle::power_norm(f_reconstruct_matrix(pt));
    if (std::abs(n - 1.0) < 1e-8) continue;
    EXPECT_EQ(f_classify(pt).interior(), n < 1.0);
    EXPECT_EQ(f_classify(pt).region, f_classify_matrix_oracle(pt).region);
  }
}

TEST(FClassify, ImageOfMatrixIsInteriorIffContraction) {
  Rng rng(32);
  std::uniform_real_distribution<double> target(0.0, 2.0);
  for (int i = 0; i < 5000; ++i) {
    const double t = target(rng);
    if (std::abs(t - 1.0) < 1e-6) continue;
    const Matrix2 A = oracle::with_norm(rng, t);
    EXPECT_EQ(f_classify(pi_F(A)).interior(), t < 1.0) << t;
  }
}

TEST(FScale, Examples) {
  const PointF a = f_scale({1.0, 1.0, 1.0, 0.0}, 0.5);
  EXPECT_EQ(a, (PointF{0.5, 0.5, 0.25, 0.0}));
  EXPECT_TRUE(f_classify(a).interior());
  const PointF b = f_scale({0.0, 0.0, -1.0, 2.0}, 0.5);
  EXPECT_EQ(b, (PointF{0.0, 0.0, -0.25, 1.0}));
  EXPECT_TRUE(f_classify(b).interior());
  EXPECT_THROW(f_scale(a, 1.0), PreconditionViolation);
}

TEST(MinkowskiGauge, Examples) {
  EXPECT_EQ(minkowski_gauge(PointF{}), 0.0);
  EXPECT_NEAR(minkowski_gauge({0.0, 0.0, -1.0, 2.0}), 1.0, 1e-7);
  EXPECT_NEAR(minkowski_gauge({0.0, 0.0, 0.25, 0.0}), 0.5, 1e-8);
}

TEST(MinkowskiGauge, EqualsNormOfPreimage) {
  Rng rng(33);
  for (int i = 0; i < 500; ++i) {
    const Matrix2 A = oracle::gaussian(rng, 0.7);
    const double n = oracle::power_norm(A);
    EXPECT_NEAR(minkowski_gauge(pi_F(A)), n, 1e-7 * n);
  }
}

TEST(FSwap, Examples) {
  const PointF w = f_swap({0.0, 0.0, -0.25, 0.0});
  EXPECT_TRUE(near(w, {Complex{0.0, 0.5}, Complex{0.0, -0.5}, 0.25, 0.0}, 1e-15));
  EXPECT_TRUE(f_classify(w).interior());
  EXPECT_EQ(f_swap(PointF{}), PointF{});
}

TEST(FSwap, PreservesInterior) {
  Rng rng(34);
  for (int i = 0; i < 1000; ++i) {
    const Matrix2 A = random_contraction(rng);
    if (operator_norm(A) > 1.0 - 1e-6) continue;
    const PointF pt = pi_F(A);
    const PointF once = f_swap(pt);
    EXPECT_TRUE(f_classify(once).interior());
    EXPECT_TRUE(f_classify(f_swap(once)).interior());
  }
}

TEST(FRelations, Examples) {
  const FRelations r = f_relations({0.0, 0.0, 0.25, 0.0});
  EXPECT_EQ(r.g2.s, Complex{0.0});
  EXPECT_EQ(r.g2.p, Complex{-0.25});
  EXPECT_TRUE(g2_classify(r.g2).interior());
  EXPECT_TRUE(tetra_classify(r.tetra).interior());
  EXPECT_EQ(r.penta.p, Complex{-0.25});
  EXPECT_TRUE(penta_classify(r.penta).interior());
  const FRelations z = f_relations(PointF{});
  EXPECT_TRUE(g2_classify(z.g2).interior() && tetra_classify(z.tetra).interior() && penta_classify(z.penta).interior());
}

TEST(Slices, SZero) {
  EXPECT_TRUE(f_slice_s_zero(0.0, 0.0, 0.0));
  EXPECT_TRUE(f_slice_s_zero(0.0, 0.875, 0.0));
  EXPECT_FALSE(f_slice_s_zero(1.0, 1.0, 1.0));
}

TEST(Slices, XAZero) {
  EXPECT_TRUE(f_slice_xa_zero(0.25, 0.0));
  EXPECT_FALSE(f_slice_xa_zero(0.0, 2.0));
  Rng rng(35);
  std::uniform_real_distribution<double> u(-1.6, 1.6);
  for (int i = 0; i < 1000; ++i) {
    const Complex p{u(rng), u(rng)}, s{u(rng), u(rng)};
    const double g = criteria::g2_slack(s, -p);
    if (std::abs(g) < 1e-6) continue;
    EXPECT_EQ(f_slice_xa_zero(p, s), g > 0.0);
  }
}

TEST(ShilovF, Examples) {
  EXPECT_TRUE(shilov_f_test({0.0, 0.0, -1.0, 2.0}));
  const Complex i{0.0, 1.0};
  EXPECT_FALSE(shilov_f_test({i, 1.0, i, 1.0 - i}));
  EXPECT_TRUE(tetra_shilov({i, 1.0, i}, kDefaultTol));
  EXPECT_TRUE(g2_shilov({1.0 - i, -i}, kDefaultTol));
  EXPECT_TRUE(shilov_f_test({1.0, -1.0, -1.0, 0.0}));
}

TEST(ShilovF, Parametrizations) {
  EXPECT_TRUE(near(shilov_f_param({0.0, 1.0, 0.0, 0.0}), {0.0, 0.0, -1.0, 2.0}, 1e-15));
  EXPECT_TRUE(near(shilov_f_from_ball({0.0, 1.0, 1.0}), {0.0, 0.0, -1.0, 2.0}, 1e-15));
  EXPECT_TRUE(near(shilov_f_param({0.0, 0.0, 1.0, 0.0}), {1.0, -1.0, -1.0, 0.0}, 1e-15));
  EXPECT_THROW(shilov_f_param({0.0, 1.0, 1.0, 0.0}), PreconditionViolation);
}

TEST(ShilovF, ParametrizedPointsPassAndUnitariesMatch) {
  Rng rng(36);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    double v[3] = {g(rng), g(rng), g(rng)};
    const double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    const double r = std::cbrt(u01(rng)) / len;
    EXPECT_TRUE(shilov_f_test(shilov_f_param({ang(rng), r * v[0], r * v[1], r * v[2]})));
  }
  // images of unitaries lie in the closure and have |p| = 1, but need not be Shilov points
  for (int i = 0; i < 200; ++i) {
    const PointF pt = pi_F(random_unitary(rng));
    EXPECT_NEAR(std::abs(pt.p), 1.0, 1e-12);
    EXPECT_NE(f_classify(pt).region, Region::Interior);
  }
}

TEST(ShilovF, DoubleCover) {
  EXPECT_TRUE(near(shilov_f_param({0.0, 1.0, 0.0, 0.0}), shilov_f_param({kPi, -1.0, 0.0, 0.0}), 1e-15));
  EXPECT_GT(distance(shilov_f_param({0.0, 0.3, 0.2, 0.1}), shilov_f_param({0.1, 0.3, 0.2, 0.1})), 1e-3);
  Rng rng(37);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> c(-0.57, 0.57);
  for (int i = 0; i < 1000; ++i) EXPECT_TRUE(shilov_f_double_cover({ang(rng), c(rng), c(rng), c(rng)}));
}
