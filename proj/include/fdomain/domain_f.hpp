#pragma once

// The domain F = { (a11, a22, det A, a12 + a21) : ||A|| < 1 } in C^4.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "fdomain/classical.hpp"
#include "fdomain/criteria.hpp"
#include "fdomain/errors.hpp"
#include "fdomain/matrix2.hpp"
#include "fdomain/optimize.hpp"
#include "fdomain/verdict.hpp"

namespace fdomain {

struct PointF {
  Complex x, a, p, s;
  friend bool operator==(const PointF&, const PointF&) = default;
};

inline double distance(const PointF& u, const PointF& v) {
  return std::sqrt(abs2(u.x - v.x) + abs2(u.a - v.a) + abs2(u.p - v.p) + abs2(u.s - v.s));
}

/// Parameters of the Shilov boundary: theta with (x2, x3, x4) in the closed unit ball of R^3.
struct ShilovParamF {
  double theta = 0.0;
  double x2 = 0.0, x3 = 0.0, x4 = 0.0;
};

/// (z, w) in the closed unit ball of C^2 and eta on the unit circle.
struct BallParamF {
  Complex z, w, eta{1.0};
};

inline PointF pi_F(const Matrix2& A) { return {A.a11, A.a22, A.det(), A.a12 + A.a21}; }

/// B = [[x, l1], [l2, a]] with (l1 + l2, l1 l2) = (s, ax - p), so pi_F(B) = pt.
/// The other assignment of the roots gives the transpose, which has the same norm.
inline Matrix2 f_reconstruct_matrix(const PointF& pt) {
  const auto [l1, l2] = quadratic_roots(pt.s, pt.a * pt.x - pt.p);
  return {pt.x, l1, l2, pt.a};
}

// ---------------------------------------------------------------------------
// Shilov boundary

/// Closed-form test: (x, a, p) in bE, s + conj(s) p = 0 and |x|^2 + |s|^2/4 <= 1.
inline bool shilov_f_test(const PointF& pt, double tol = kDefaultTol) {
  return tetra_shilov({pt.x, pt.a, pt.p}, tol) && std::abs(pt.s + std::conj(pt.s) * pt.p) <= tol &&
         abs2(pt.x) + 0.25 * abs2(pt.s) <= 1.0 + tol;
}

namespace detail {

/// g(zeta, x2, x3, x4) with zeta on the unit circle.
inline PointF shilov_f_map(Complex zeta, double x2, double x3, double x4) {
  return {zeta * Complex{x3, x4}, -zeta * Complex{x3, -x4}, -(zeta * zeta), 2.0 * zeta * x2};
}

inline bool in_closed_ball3(double x2, double x3, double x4) {
  return x2 * x2 + x3 * x3 + x4 * x4 <= 1.0 + 1e-12;
}

}  // namespace detail

inline PointF shilov_f_param(const ShilovParamF& q) {
  if (!detail::in_closed_ball3(q.x2, q.x3, q.x4)) {
    throw PreconditionViolation("shilov_f_param: x2^2 + x3^2 + x4^2 exceeds 1");
  }
  return detail::shilov_f_map(unit_phase(q.theta), q.x2, q.x3, q.x4);
}

inline PointF shilov_f_from_ball(const BallParamF& q) {
  if (abs2(q.z) + abs2(q.w) > 1.0 + 1e-12) throw PreconditionViolation("shilov_f_from_ball: |z|^2 + |w|^2 > 1");
  if (std::abs(std::abs(q.eta) - 1.0) > 1e-12) throw PreconditionViolation("shilov_f_from_ball: |eta| != 1");
  return {std::conj(q.z), -q.eta * q.z, -q.eta, q.w + std::conj(q.w) * q.eta};
}

/// The parametrization identifies (zeta, x) with (-zeta, -x) and nothing else:
/// checks exact equality of the antipodal images and separation of nearby
/// non-antipodal parameters.
inline bool shilov_f_double_cover(const ShilovParamF& q, double tol = kDefaultTol) {
  if (!detail::in_closed_ball3(q.x2, q.x3, q.x4)) {
    throw PreconditionViolation("shilov_f_double_cover: x2^2 + x3^2 + x4^2 exceeds 1");
  }
  const Complex zeta = unit_phase(q.theta);
  const PointF base = detail::shilov_f_map(zeta, q.x2, q.x3, q.x4);
  if (!(base == detail::shilov_f_map(-zeta, -q.x2, -q.x3, -q.x4))) return false;

  const double delta = 1e-3;
  std::vector<PointF> others;
  others.push_back(detail::shilov_f_map(zeta * unit_phase(delta), q.x2, q.x3, q.x4));
  others.push_back(detail::shilov_f_map(zeta * unit_phase(0.5 * kPi), q.x2, q.x3, q.x4));
  // shrink the ball vector, or push it inward along x2 when it is zero
  const double len = std::sqrt(q.x2 * q.x2 + q.x3 * q.x3 + q.x4 * q.x4);
  if (len > 0.0) {
    const double k = 1.0 - delta;
    others.push_back(detail::shilov_f_map(zeta, k * q.x2, k * q.x3, k * q.x4));
    others.push_back(detail::shilov_f_map(-zeta, q.x2, q.x3, q.x4));
  } else {
    others.push_back(detail::shilov_f_map(zeta, delta, 0.0, 0.0));
  }
  return std::all_of(others.begin(), others.end(), [&](const PointF& o) { return distance(o, base) > tol; });
}

/// Distance from pt to the parametrized Shilov boundary: seeds from a
/// (theta x ball) parameter grid, then Nelder-Mead on the best seeds.
inline double shilov_f_distance(const PointF& pt, int theta_steps = 64, int ball_steps = 7) {
  struct Seed {
    double d, theta, x2, x3, x4;
  };
  auto eval = [&](double theta, double x2, double x3, double x4) {
    const double len = std::sqrt(x2 * x2 + x3 * x3 + x4 * x4);
    if (len > 1.0) {
      x2 /= len;
      x3 /= len;
      x4 /= len;
    }
    return distance(detail::shilov_f_map(unit_phase(theta), x2, x3, x4), pt);
  };
  std::vector<Seed> seeds;
  for (int t = 0; t < theta_steps; ++t) {
    const double theta = kPi * t / theta_steps;  // theta and theta + pi cover the same set
    for (int i = 0; i < ball_steps; ++i) {
      for (int j = 0; j < ball_steps; ++j) {
        for (int k = 0; k < ball_steps; ++k) {
          const double x2 = -1.0 + 2.0 * i / (ball_steps - 1);
          const double x3 = -1.0 + 2.0 * j / (ball_steps - 1);
          const double x4 = -1.0 + 2.0 * k / (ball_steps - 1);
          if (x2 * x2 + x3 * x3 + x4 * x4 > 1.0) continue;
          seeds.push_back({eval(theta, x2, x3, x4), theta, x2, x3, x4});
        }
      }
    }
  }
  const std::size_t keep = std::min<std::size_t>(4, seeds.size());
  std::partial_sort(seeds.begin(), seeds.begin() + static_cast<std::ptrdiff_t>(keep), seeds.end(),
                    [](const Seed& u, const Seed& v) { return u.d < v.d; });
  double best = seeds.front().d;
  for (std::size_t i = 0; i < keep; ++i) {
    auto f = [&](const std::vector<double>& v) { return eval(v[0], v[1], v[2], v[3]); };
    const auto res = opt::nelder_mead_restarts(f, {seeds[i].theta, seeds[i].x2, seeds[i].x3, seeds[i].x4}, 0.1,
                                               1e-15, 1e-12);
    best = std::min(best, res.value);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Membership

inline MembershipVerdict f_classify(const PointF& pt, double tol = kDefaultTol) {
  MembershipVerdict v = verdict_from_margin(criteria::f_slack(pt.x, pt.a, pt.p, pt.s), tol);
  v.shilov = !v.interior() && shilov_f_test(pt, tol);
  return v;
}

/// Independent route: rebuild the matrix and compare its operator norm with 1.
inline MembershipVerdict f_classify_matrix_oracle(const PointF& pt, double tol = kDefaultTol) {
  return verdict_from_margin(1.0 - operator_norm(f_reconstruct_matrix(pt)), tol);
}

/// (r x, r a, r^2 p, r s); maps the closure of F into F for 0 < r < 1.
inline PointF f_scale(const PointF& pt, double r) {
  if (!(r > 0.0 && r < 1.0)) throw PreconditionViolation("f_scale: r must lie in (0, 1)");
  return {r * pt.x, r * pt.a, r * r * pt.p, r * pt.s};
}

/// Minkowski functional of F for the weights (1, 1, 2, 1), by bisection.
inline double minkowski_gauge(const PointF& pt, double tol = kDefaultTol) {
  if (pt == PointF{}) return 0.0;
  // the G2 part uses the root moduli: the inequality form vanishes to third
  // order along rays through points with a double root on the circle
  auto inside = [&](double t) {
    const Complex x = pt.x / t, a = pt.a / t, p = pt.p / (t * t), s = pt.s / t;
    const auto [l1, l2] = quadratic_roots(s, a * x - p);
    return std::max(std::abs(l1), std::abs(l2)) < 1.0 && std::abs(p) < 1.0 && criteria::f_quadratic(x, a, p, s) > 0.0;
  };
  double lo = 1.0, hi = 1.0;
  if (inside(1.0)) {
    while (inside(lo)) {
      lo *= 0.5;
      if (lo < std::numeric_limits<double>::min()) return 0.0;
    }
    hi = 2.0 * lo;
  } else {
    int doublings = 0;
    while (!inside(hi)) {
      hi *= 2.0;
      if (++doublings > 60) throw OptimizerNoConverge("minkowski_gauge: no bracket within 60 doublings");
    }
    lo = 0.5 * hi;
  }
  const double rel = std::max(tol, 1e-15);
  for (int i = 0; i < 200 && hi - lo > rel * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (inside(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

/// With (l1, l2) the roots of t^2 - s t + (ax - p): (l1, l2, -p, a + x).
inline PointF f_swap(const PointF& pt) {
  const auto [l1, l2] = quadratic_roots(pt.s, pt.a * pt.x - pt.p);
  return {l1, l2, -pt.p, pt.a + pt.x};
}

struct FRelations {
  PointG2 g2;
  PointTetra tetra;
  PointPenta penta;
};

/// ((s, ax - p), (x, a, p), (a, s, -p)).
inline FRelations f_relations(const PointF& pt) {
  return {{pt.s, pt.a * pt.x - pt.p}, {pt.x, pt.a, pt.p}, {pt.a, pt.s, -pt.p}};
}

inline bool f_slice_s_zero(Complex x1, Complex x2, Complex x3, double tol = kDefaultTol) {
  return f_classify({x1, x2, x3, 0.0}, tol).interior();
}

/// (0, 0, p, s) in F iff (s, -p) in G2; both sides are evaluated.
inline bool f_slice_xa_zero(Complex p, Complex s, double tol = kDefaultTol) {
  const double mf = criteria::f_slack(0.0, 0.0, p, s);
  const double mg = criteria::g2_slack(s, -p);
  if (margins_conflict(mf, mg, tol)) {
    throw CriteriaDisagree("f_slice_xa_zero: F slack " + std::to_string(mf) + " vs G2 slack " + std::to_string(mg));
  }
  return mf > tol;
}

}  // namespace fdomain
