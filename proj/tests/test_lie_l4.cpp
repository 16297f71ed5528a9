#include <gtest/gtest.h>

#include "fdomain/lie_ball.hpp"
#include "oracles.hpp"

using namespace fdomain;

namespace {

PointCn random_c4(Rng& rng, double scale) {
  std::normal_distribution<double> g(0.0, scale);
  return {Complex{g(rng), g(rng)}, Complex{g(rng), g(rng)}, Complex{g(rng), g(rng)}, Complex{g(rng), g(rng)}};
}

std::array<double, 4> random_sphere(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::array<double, 4> x{g(rng), g(rng), g(rng), g(rng)};
  const double n = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
  for (double& v : x) v /= n;
  return x;
}

}  // namespace

TEST(LieBall, Examples) {
  EXPECT_EQ(lie_ball_classify({0.0, 0.0, 0.0, 0.0}).region, Region::Interior);
  EXPECT_EQ(lie_ball_classify({1.0, 0.0, 0.0, 0.0}).region, Region::ClosureBoundary);
  const PointCn z{Complex{0.0, 0.5}, 0.5, 0.0, 0.0};
  EXPECT_NEAR(2.0 * norm2(z) - std::norm(bullet(z)), 1.0, 1e-15);
  EXPECT_EQ(lie_ball_classify(z).region, Region::ClosureBoundary);
  EXPECT_NEAR(oracle::lie_ball_slack(z), 0.0, 1e-15);
  EXPECT_EQ(lie_ball_classify({0.8, 0.8, 0.0, 0.0}).region, Region::Outside);
}

TEST(LieBall, MatchesDefiningInequality) {
  Rng rng(41);
  for (int i = 0; i < 5000; ++i) {
    const PointCn z = random_c4(rng, 0.4);
    const double m = oracle::lie_ball_slack(z);
    if (std::abs(m) < 1e-8) continue;
    EXPECT_EQ(lie_ball_classify(z).interior(), m > 0.0);
  }
}

TEST(LambdaMap, Examples) {
  EXPECT_EQ(lambda_map({0.0, 0.0, 0.0, 0.0}), (PointCn{0.0, 0.0, 0.0, 0.0}));
  const PointCn w = lambda_map({Complex{0.0, 1.0}, 0.0, 0.0, 0.0});
  EXPECT_NEAR(std::abs(w[0] + 1.0), 0.0, 1e-15);
}

TEST(LambdaMap, TwoToOne) {
  Rng rng(42);
  for (int i = 0; i < 100; ++i) {
    PointCn z = random_c4(rng, 1.0);
    PointCn flipped = z;
    flipped[0] = -flipped[0];
    EXPECT_EQ(lambda_map(z), lambda_map(flipped));
  }
}

TEST(BiholoF, Examples) {
  EXPECT_EQ(biholo_f({0.0, 0.0, 0.0, 0.0}), PointF{});
  const PointF pt = biholo_f(shilov_l4_param({0.0, {0.0, 1.0, 0.0, 0.0}}));
  EXPECT_EQ(pt, (PointF{0.0, 0.0, -1.0, 2.0}));
  EXPECT_TRUE(shilov_f_test(pt));
}

TEST(BiholoF, InteriorMapsToInterior) {
  Rng rng(43);
  int checked = 0;
  for (int i = 0; i < 20000 && checked < 1000; ++i) {
    const PointCn z = random_c4(rng, 0.35);
    if (oracle::lie_ball_slack(z) < 1e-6) continue;
    EXPECT_TRUE(f_classify(biholo_f(lambda_map(z))).interior());
    ++checked;
  }
  EXPECT_EQ(checked, 1000);
}

TEST(ShilovL4, Examples) {
  EXPECT_EQ(shilov_l4_param({0.0, {1.0, 0.0, 0.0, 0.0}}), (PointCn{1.0, 0.0, 0.0, 0.0}));
  EXPECT_EQ(shilov_l4_param({0.0, {0.0, 1.0, 0.0, 0.0}}), (PointCn{0.0, 1.0, 0.0, 0.0}));
  EXPECT_THROW(shilov_l4_param({0.0, {1.0, 1.0, 0.0, 0.0}}), PreconditionViolation);
}

TEST(ShilovL4, OnTheLieSphereAndTransported) {
  Rng rng(44);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
  for (int i = 0; i < 2000; ++i) {
    const ShilovParamL4 q{ang(rng), random_sphere(rng)};
    const Complex e = unit_phase(q.theta);
    const PointCn w{e * q.x[0], e * q.x[1], e * q.x[2], e * q.x[3]};
    EXPECT_NEAR(oracle::lie_ball_slack(w), 0.0, 1e-7);
    EXPECT_NE(lie_ball_classify(w).region, Region::Interior);
    const PointCn z = shilov_l4_param(q);
    const PointCn lw = lambda_map(w);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(std::abs(z[k] - lw[k]), 0.0, 1e-15);
    EXPECT_TRUE(shilov_f_test(biholo_f(z)));
  }
}

TEST(ShilovL4, GridTransportAndDistance) {
  const TransportedBoundary grid = transported_shilov_grid(256, 16);
  ASSERT_EQ(grid.images.size(), 256u * 16u);
  for (const PointF& pt : grid.images) EXPECT_TRUE(shilov_f_test(pt));
  Rng rng(45);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> c(-0.57, 0.57);
  for (int i = 0; i < 20; ++i) {
    const PointF pt = shilov_f_param({ang(rng), c(rng), c(rng), c(rng)});
    EXPECT_LT(transported_distance(pt, grid), 1e-6);
  }
  EXPECT_GT(transported_distance({0.0, 0.0, 0.0, 0.0}, grid), 0.5);
}

TEST(Sphere3Lattice, UnitNorm) {
  for (const auto& x : sphere3_lattice(500)) {
    EXPECT_NEAR(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3], 1.0, 1e-14);
  }
}
