#pragma once

// Lie ball L_n, the two-to-one map Lambda_n and the biholomorphism onto F.

#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "fdomain/domain_f.hpp"
#include "fdomain/errors.hpp"
#include "fdomain/verdict.hpp"

namespace fdomain {

using PointCn = std::vector<Complex>;

struct ShilovParamL4 {
  double theta = 0.0;
  std::array<double, 4> x{1.0, 0.0, 0.0, 0.0};
};

inline double norm2(const PointCn& z) {
  double acc = 0.0;
  for (const Complex& c : z) acc += abs2(c);
  return acc;
}

/// z . z = z_1^2 + ... + z_n^2 (no conjugation).
inline Complex bullet(const PointCn& z) {
  Complex acc{0.0};
  for (const Complex& c : z) acc += c * c;
  return acc;
}

/// Interior iff ||z||^2 < 1 and 2||z||^2 - |z.z|^2 < 1. The square-root form
/// sqrt(||z||^4 - |z.z|^2) < 1 - ||z||^2 is evaluated as a cross-check.
inline MembershipVerdict lie_ball_classify(const PointCn& z, double tol = kDefaultTol) {
  if (z.size() < 2) throw PreconditionViolation("lie_ball_classify: dimension must be at least 2");
  const double n2 = norm2(z);
  const double b2 = abs2(bullet(z));
  const double m = std::min(1.0 - n2, 1.0 - 2.0 * n2 + b2);
  const double m_root = (1.0 - n2) - std::sqrt(std::max(0.0, n2 * n2 - b2));
  if (margins_conflict(m, m_root, tol)) {
    throw CriteriaDisagree("lie_ball_classify: forms disagree (" + std::to_string(m) + " vs " +
                           std::to_string(m_root) + ")");
  }
  return verdict_from_margin(m, tol);
}

/// (z_1^2, z_2, ..., z_n).
inline PointCn lambda_map(const PointCn& z) {
  if (z.size() < 2) throw PreconditionViolation("lambda_map: dimension must be at least 2");
  PointCn w = z;
  w[0] = z[0] * z[0];
  return w;
}

/// f(w) = (w3 + i w4, -w3 + i w4, -w2^2 - w3^2 - w4^2 - w1, 2 w2).
inline PointF biholo_f(const PointCn& w) {
  if (w.size() != 4) throw PreconditionViolation("biholo_f: expects a point of C^4");
  const Complex i{0.0, 1.0};
  return {w[2] + i * w[3], -w[2] + i * w[3], -w[1] * w[1] - w[2] * w[2] - w[3] * w[3] - w[0], 2.0 * w[1]};
}

/// (e^{2i theta} x1^2, e^{i theta} x2, e^{i theta} x3, e^{i theta} x4) with x on the unit sphere.
inline PointCn shilov_l4_param(const ShilovParamL4& q) {
  const double len2 = std::inner_product(q.x.begin(), q.x.end(), q.x.begin(), 0.0);
  if (std::abs(len2 - 1.0) > 1e-12) throw PreconditionViolation("shilov_l4_param: x must lie on the unit sphere");
  const Complex e = unit_phase(q.theta);
  return {e * e * (q.x[0] * q.x[0]), e * q.x[1], e * q.x[2], e * q.x[3]};
}

/// Quasi-uniform points on S^3: equal-area radial split, irrational angle steps.
inline std::vector<std::array<double, 4>> sphere3_lattice(int n) {
  std::vector<std::array<double, 4>> pts;
  pts.reserve(static_cast<std::size_t>(n));
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  const double plastic = 1.324717957244746;
  for (int k = 0; k < n; ++k) {
    const double u = (k + 0.5) / n;
    const double c = std::sqrt(u);
    const double s = std::sqrt(1.0 - u);
    const double a1 = 2.0 * kPi * std::fmod(k / golden, 1.0);
    const double a2 = 2.0 * kPi * std::fmod(k / plastic, 1.0);
    pts.push_back({c * std::cos(a1), c * std::sin(a1), s * std::cos(a2), s * std::sin(a2)});
  }
  return pts;
}

/// Transported grid: biholo_f applied to the Shilov boundary of L4 sampled on
/// a sphere lattice times a uniform theta grid.
struct TransportedBoundary {
  std::vector<ShilovParamL4> params;
  std::vector<PointF> images;
};

inline TransportedBoundary transported_shilov_grid(int sphere_points, int theta_steps) {
  TransportedBoundary out;
  const auto sphere = sphere3_lattice(sphere_points);
  for (int t = 0; t < theta_steps; ++t) {
    const double theta = 2.0 * kPi * t / theta_steps;
    for (const auto& x : sphere) {
      const ShilovParamL4 q{theta, x};
      out.params.push_back(q);
      out.images.push_back(biholo_f(shilov_l4_param(q)));
    }
  }
  return out;
}

/// Distance from pt to the transported set f(Lambda_4(Shilov boundary of L4)),
/// seeded by the nearest grid images and refined over (theta, S^3).
inline double transported_distance(const PointF& pt, const TransportedBoundary& grid, int max_seeds = 8) {
  if (grid.images.empty()) throw PreconditionViolation("transported_distance: empty grid");
  std::vector<std::pair<double, std::size_t>> order(grid.images.size());
  for (std::size_t i = 0; i < grid.images.size(); ++i) order[i] = {distance(pt, grid.images[i]), i};
  const std::size_t n_seeds = std::min(order.size(), static_cast<std::size_t>(std::max(1, max_seeds)));
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_seeds), order.end());

  auto eval = [&](const std::vector<double>& v) {
    std::array<double, 4> x{v[1], v[2], v[3], v[4]};
    const double len = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
    if (len == 0.0) return std::numeric_limits<double>::infinity();
    for (double& c : x) c /= len;
    const Complex e = unit_phase(v[0]);
    const PointCn w{e * e * (x[0] * x[0]), e * x[1], e * x[2], e * x[3]};
    return distance(biholo_f(w), pt);
  };
  double best = order.front().first;
  // later seeds only matter when the nearest one settles in a local minimum
  for (std::size_t k = 0; k < n_seeds && best > 1e-10; ++k) {
    const auto& q = grid.params[order[k].second];
    const auto res = opt::nelder_mead_restarts(eval, {q.theta, q.x[0], q.x[1], q.x[2], q.x[3]}, 0.05, 1e-16, 1e-12);
    best = std::min(best, res.value);
  }
  return best;
}

}  // namespace fdomain
