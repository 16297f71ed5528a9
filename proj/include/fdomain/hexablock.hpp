#pragma once

// Hexablock H (supremum of the fractional maps Psi over the bidisc) and the
// normed hexablock H_N = { (a21, a11, a22, det A) : ||A|| < 1 }.

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "fdomain/classical.hpp"
#include "fdomain/domain_f.hpp"
#include "fdomain/errors.hpp"
#include "fdomain/matrix2.hpp"
#include "fdomain/optimize.hpp"
#include "fdomain/verdict.hpp"

namespace fdomain {

struct PointH {
  Complex a, x1, x2, x3;
  friend bool operator==(const PointH&, const PointH&) = default;
};

struct PsiProbe {
  Complex z1, z2;
};

inline PointH pi_hexa(const Matrix2& A) { return {A.a21, A.a11, A.a22, A.det()}; }

/// Psi_{z1,z2}(a, x) = a sqrt((1 - |z1|^2)(1 - |z2|^2)) / (1 - x1 z1 - x2 z2 + x3 z1 z2).
inline Complex psi_eval(const PsiProbe& q, const PointH& pt) {
  if (!(std::abs(q.z1) < 1.0 && std::abs(q.z2) < 1.0)) {
    throw PreconditionViolation("psi_eval: probe must lie in the open bidisc");
  }
  if (!tetra_classify({pt.x1, pt.x2, pt.x3}).interior()) {
    throw PreconditionViolation("psi_eval: (x1, x2, x3) is not in the tetrablock");
  }
  const Complex den = 1.0 - pt.x1 * q.z1 - pt.x2 * q.z2 + pt.x3 * q.z1 * q.z2;
  if (std::abs(den) < 1e-14) throw DenominatorNearZero("psi_eval: denominator vanishes");
  return pt.a * std::sqrt((1.0 - abs2(q.z1)) * (1.0 - abs2(q.z2))) / den;
}

struct PsiSupOptions {
  int radial = 32;
  int angular = 64;
  int starts = 5;
  double radial_power = 1.5;  // > 1 concentrates radii near the centre
};

/// Supremum of |Psi| over the open bidisc: polar product grid, then
/// coordinate-wise golden-section refinement from the best cells.
inline double psi_sup(const PointH& pt, double tol = kDefaultTol, const PsiSupOptions& opts = {}) {
  if (!tetra_classify({pt.x1, pt.x2, pt.x3}, tol).interior()) {
    throw PreconditionViolation("psi_sup: (x1, x2, x3) is not in the tetrablock");
  }
  if (pt.a == Complex{0.0}) return 0.0;
  const double a2 = abs2(pt.a);

  std::vector<Complex> disc;
  for (double r : detail::polar_radii(opts.radial, opts.radial_power)) {
    for (int k = 0; k < opts.angular; ++k) {
      disc.push_back(std::polar(r, 2.0 * kPi * k / opts.angular));
      if (r == 0.0) break;
    }
  }
  // squared objective on the grid; den = (1 - x1 z1) - z2 (x2 - x3 z1)
  struct Cell {
    double v2;
    std::size_t i, j;
  };
  std::vector<Cell> best;
  best.reserve(static_cast<std::size_t>(opts.starts) + 1);
  std::vector<double> w(disc.size());
  for (std::size_t j = 0; j < disc.size(); ++j) w[j] = 1.0 - abs2(disc[j]);
  for (std::size_t i = 0; i < disc.size(); ++i) {
    const Complex alpha = 1.0 - pt.x1 * disc[i];
    const Complex beta = pt.x2 - pt.x3 * disc[i];
    const double scale = a2 * w[i];
    for (std::size_t j = 0; j < disc.size(); ++j) {
      const double v2 = scale * w[j] / abs2(alpha - beta * disc[j]);
      if (best.size() < static_cast<std::size_t>(opts.starts) || v2 > best.back().v2) {
        best.push_back({v2, i, j});
        std::sort(best.begin(), best.end(), [](const Cell& u, const Cell& v) { return u.v2 > v.v2; });
        if (best.size() > static_cast<std::size_t>(opts.starts)) best.pop_back();
      }
    }
  }

  auto value = [&](const std::vector<double>& v) {
    const Complex z1{v[0], v[1]};
    const Complex z2{v[2], v[3]};
    const double w1 = 1.0 - abs2(z1);
    const double w2 = 1.0 - abs2(z2);
    if (w1 <= 0.0 || w2 <= 0.0) return 0.0;
    const Complex den = 1.0 - pt.x1 * z1 - pt.x2 * z2 + pt.x3 * z1 * z2;
    return std::sqrt(a2 * w1 * w2 / abs2(den));
  };
  const double h0 = 2.0 / opts.radial;
  const double xtol = std::max(1e-10, 0.1 * std::sqrt(tol));
  double sup = std::sqrt(best.front().v2);
  bool converged = true;
  for (const Cell& c : best) {
    const Complex z1 = disc[c.i];
    const Complex z2 = disc[c.j];
    const auto res = opt::coordinate_refine_max(value, {z1.real(), z1.imag(), z2.real(), z2.imag()}, h0, xtol);
    converged = converged && res.converged;
    sup = std::max(sup, res.value);
  }
  if (!converged) throw OptimizerNoConverge("psi_sup: refinement did not converge");
  return sup;
}

struct HexaVerdict {
  MembershipVerdict verdict;
  std::optional<double> sup;  // present when the supremum was computed
  bool indeterminate = false;  // inside the numeric band around sup = 1
};

inline HexaVerdict hexa_classify(const PointH& pt, double tol = kDefaultTol, const PsiSupOptions& opts = {}) {
  const MembershipVerdict t = tetra_classify({pt.x1, pt.x2, pt.x3}, tol);
  HexaVerdict out;
  out.verdict.tol = tol;
  if (pt.a == Complex{0.0} || t.region == Region::Outside) {
    // the a = 0 slice of H is exactly {0} x E
    out.verdict.region = t.region;
    out.verdict.margin = t.margin;
    return out;
  }
  if (t.region == Region::ClosureBoundary) {
    out.verdict.region = Region::ClosureBoundary;
    out.verdict.margin = t.margin;
    out.indeterminate = true;
    return out;
  }
  const double sup = psi_sup(pt, tol, opts);
  out.sup = sup;
  out.verdict.margin = std::min(t.margin, 1.0 - sup);
  out.verdict.region = region_from_margin(1.0 - sup, tol);
  out.indeterminate = out.verdict.region == Region::ClosureBoundary;
  return out;
}

struct HNVerdict {
  bool in_open = false;
  bool in_closure = false;
  bool in_interior_of_HN = false;
};

/// For a != 0 the unique matrix with pi_hexa(A) = pt.
inline Matrix2 hn_reconstruct_matrix(const PointH& pt) {
  if (pt.a == Complex{0.0}) throw PreconditionViolation("hn_reconstruct_matrix: requires a != 0");
  return {pt.x1, (pt.x1 * pt.x2 - pt.x3) / pt.a, pt.a, pt.x2};
}

inline HNVerdict hn_classify(const PointH& pt, double tol = kDefaultTol) {
  HNVerdict v;
  if (pt.a != Complex{0.0}) {
    const PointF image{pt.x1, pt.x2, pt.x3, pt.a + (pt.x1 * pt.x2 - pt.x3) / pt.a};
    v.in_open = f_classify(image, tol).interior();
    v.in_closure = operator_norm(hn_reconstruct_matrix(pt)) <= 1.0 + tol;
    v.in_interior_of_HN = v.in_open;
    return v;
  }
  const bool factorizes = std::abs(pt.x3 - pt.x1 * pt.x2) <= 1e-12;
  v.in_open = factorizes && tetra_classify({pt.x1, pt.x2, pt.x3}, tol).interior();
  // [[x1, t], [0, x2]] has least norm at t = 0
  v.in_closure = factorizes && std::max(std::abs(pt.x1), std::abs(pt.x2)) <= 1.0 + tol;
  v.in_interior_of_HN = false;
  return v;
}

/// bH = { pt in closure(H_N) : |x3| = 1 }.
inline bool shilov_h_test(const PointH& pt, double tol = kDefaultTol) {
  return hn_classify(pt, tol).in_closure && std::abs(std::abs(pt.x3) - 1.0) <= tol;
}

}  // namespace fdomain
