#pragma once

// Symmetrized bidisc G2 (closure Gamma), tetrablock E and pentablock P.

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "fdomain/criteria.hpp"
#include "fdomain/errors.hpp"
#include "fdomain/optimize.hpp"
#include "fdomain/scalar.hpp"
#include "fdomain/verdict.hpp"

namespace fdomain {

struct PointG2 {
  Complex s, p;
  friend bool operator==(const PointG2&, const PointG2&) = default;
};

struct PointTetra {
  Complex x1, x2, x3;
  friend bool operator==(const PointTetra&, const PointTetra&) = default;
};

struct PointPenta {
  Complex a, s, p;
  friend bool operator==(const PointPenta&, const PointPenta&) = default;
};

// ---------------------------------------------------------------------------
// Symmetrized bidisc

inline std::pair<Complex, Complex> g2_roots(const PointG2& pt) { return quadratic_roots(pt.s, pt.p); }

/// (s, p) in b-Gamma: |p| = 1, s = conj(s) p, |s| <= 2.
inline bool g2_shilov(const PointG2& pt, double tol) {
  return std::abs(std::abs(pt.p) - 1.0) <= tol && std::abs(pt.s - std::conj(pt.s) * pt.p) <= tol &&
         std::abs(pt.s) <= 2.0 + tol;
}

inline MembershipVerdict g2_classify(const PointG2& pt, double tol = kDefaultTol) {
  const double m = criteria::g2_slack(pt.s, pt.p);
  const double m_alt = criteria::g2_slack_alt(pt.s, pt.p);
  if (margins_conflict(m, m_alt, tol)) {
    throw CriteriaDisagree("g2_classify: slack forms disagree (" + std::to_string(m) + " vs " +
                           std::to_string(m_alt) + ")");
  }
  MembershipVerdict v = verdict_from_margin(m, tol);
  v.shilov = !v.interior() && g2_shilov(pt, tol);
  return v;
}

// ---------------------------------------------------------------------------
// Tetrablock

/// x in bE: x1 = conj(x2) x3, |x3| = 1, |x2| <= 1.
inline bool tetra_shilov(const PointTetra& pt, double tol) {
  return std::abs(std::abs(pt.x3) - 1.0) <= tol && std::abs(pt.x1 - std::conj(pt.x2) * pt.x3) <= tol &&
         std::abs(pt.x2) <= 1.0 + tol;
}

/// Interior from the primary tetrablock inequality; the closure is decided
/// through the s = 0 slice of the closed domain F.
inline MembershipVerdict tetra_classify(const PointTetra& pt, double tol = kDefaultTol) {
  const double m = criteria::tetra_slack(pt.x1, pt.x2, pt.x3);
  const double m_alt = criteria::tetra_slack_alt(pt.x1, pt.x2, pt.x3);
  if (margins_conflict(m, m_alt, tol)) {
    throw CriteriaDisagree("tetra_classify: slack forms disagree (" + std::to_string(m) + " vs " +
                           std::to_string(m_alt) + ")");
  }
  MembershipVerdict v{Region::Interior, false, m, tol};
  if (m <= tol) {
    const double closure = criteria::f_slack(pt.x1, pt.x2, pt.x3, 0.0);
    if (closure >= -tol) {
      v.region = Region::ClosureBoundary;
      v.margin = std::clamp(m, -tol, tol);
    } else {
      v.region = Region::Outside;
      v.margin = std::min(m, closure);
    }
  }
  v.shilov = !v.interior() && tetra_shilov(pt, tol);
  return v;
}

// ---------------------------------------------------------------------------
// Pentablock

struct DiscSupOptions {
  int radial = 64;
  int angular = 128;
  int starts = 5;
};

namespace detail {

struct GridCell {
  double value;
  double re, im;
};

inline std::vector<double> polar_radii(int n, double power) {
  std::vector<double> r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = std::pow(static_cast<double>(i) / n, power);
  return r;
}

}  // namespace detail

/// sup over the open disc of |a (1 - |z|^2) / (1 - s z + p z^2)|, requires (s, p) in Gamma.
inline double penta_sup(const PointPenta& pt, double tol = kDefaultTol, const DiscSupOptions& opts = {}) {
  if (criteria::g2_slack(pt.s, pt.p) < -tol) {
    throw PreconditionViolation("penta_sup: (s, p) is not in Gamma");
  }
  if (pt.a == Complex{0.0}) return 0.0;
  const double abs_a = std::abs(pt.a);
  auto value = [&](double re, double im) {
    const double r2 = re * re + im * im;
    if (r2 >= 1.0) return 0.0;
    const Complex z{re, im};
    return abs_a * (1.0 - r2) / std::abs(1.0 - pt.s * z + pt.p * z * z);
  };

  std::vector<detail::GridCell> cells;
  cells.reserve(static_cast<std::size_t>(opts.radial * opts.angular));
  for (double r : detail::polar_radii(opts.radial, 1.0)) {
    for (int k = 0; k < opts.angular; ++k) {
      const double t = 2.0 * kPi * k / opts.angular;
      const double re = r * std::cos(t);
      const double im = r * std::sin(t);
      cells.push_back({value(re, im), re, im});
      if (r == 0.0) break;
    }
  }
  const std::size_t n_starts = std::min<std::size_t>(static_cast<std::size_t>(opts.starts), cells.size());
  std::partial_sort(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(n_starts), cells.end(),
                    [](const auto& u, const auto& v) { return u.value > v.value; });

  const double h0 = 2.0 / opts.radial;
  const double xtol = std::max(1e-10, 0.1 * std::sqrt(tol));
  double best = cells.front().value;
  bool converged = true;
  for (std::size_t i = 0; i < n_starts; ++i) {
    auto f = [&](const std::vector<double>& x) { return value(x[0], x[1]); };
    const auto res = opt::coordinate_refine_max(f, {cells[i].re, cells[i].im}, h0, xtol);
    converged = converged && res.converged;
    best = std::max(best, res.value);
  }
  if (!converged) throw OptimizerNoConverge("penta_sup: refinement did not converge");
  return best;
}

/// (a, s, p) in bP: (s, p) in b-Gamma and |a|^2 + |s|^2/4 = 1.
inline bool penta_shilov(const PointPenta& pt, double tol) {
  return g2_shilov({pt.s, pt.p}, tol) && std::abs(abs2(pt.a) + 0.25 * abs2(pt.s) - 1.0) <= tol;
}

/// Margin min(G2 slack of (s, p), bound - |a|) where bound comes from the roots of t^2 - s t + p.
inline double penta_slack(const PointPenta& pt) {
  const auto [l1, l2] = quadratic_roots(pt.s, pt.p);
  return std::min(criteria::g2_slack(pt.s, pt.p), criteria::penta_bound(l1, l2) - std::abs(pt.a));
}

struct PentaOptions {
  bool cross_check_sup = true;
  DiscSupOptions sup{};
};

/// Closed-form pentablock test. For points with (s, p) inside G2 the supremum
/// criterion is evaluated as well and must agree.
inline MembershipVerdict penta_classify(const PointPenta& pt, double tol = kDefaultTol,
                                        const PentaOptions& opts = {}) {
  const auto [l1, l2] = quadratic_roots(pt.s, pt.p);
  const double g2 = criteria::g2_slack(pt.s, pt.p);
  const double bound = criteria::penta_bound(l1, l2);
  const double m = std::min(g2, bound - std::abs(pt.a));
  if (opts.cross_check_sup && g2 > tol) {
    const double sup = penta_sup(pt, tol, opts.sup);
    // sup is |a| / bound on G2, so both slacks share a sign
    if (margins_conflict(bound - std::abs(pt.a), 1.0 - sup, tol)) {
      throw CriteriaDisagree("penta_classify: sup criterion " + std::to_string(sup) +
                             " disagrees with bound " + std::to_string(bound));
    }
  }
  MembershipVerdict v = verdict_from_margin(m, tol);
  v.shilov = !v.interior() && penta_shilov(pt, tol);
  return v;
}

}  // namespace fdomain
