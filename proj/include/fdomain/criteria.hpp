#pragma once

// Raw inequality slacks shared by the domain modules. Each function is positive
// exactly on the open domain and non-negative exactly on its closure.

#include <algorithm>
#include <cmath>

#include "fdomain/matrix2.hpp"
#include "fdomain/scalar.hpp"

namespace fdomain::criteria {

/// Symmetrized bidisc: min(1 - |p|^2 - |s - conj(s) p|, 2 - |s|).
inline double g2_slack(Complex s, Complex p) {
  return std::min(1.0 - abs2(p) - std::abs(s - std::conj(s) * p), 2.0 - std::abs(s));
}

/// Second symmetrized-bidisc form: 4 - |s|^2 - 2|s - conj(s) p| - |s^2 - 4p|.
inline double g2_slack_alt(Complex s, Complex p) {
  return std::min(4.0 - abs2(s) - 2.0 * std::abs(s - std::conj(s) * p) - std::abs(s * s - 4.0 * p),
                  2.0 - std::abs(s));
}

/// Tetrablock: 1 - |x1|^2 - |x2 - conj(x1) x3| - |x1 x2 - x3|.
inline double tetra_slack(Complex x1, Complex x2, Complex x3) {
  return 1.0 - abs2(x1) - std::abs(x2 - std::conj(x1) * x3) - std::abs(x1 * x2 - x3);
}

/// Q(x, a, p, s) = 1 - |a|^2 - |x|^2 + |p|^2 - |s|^2/2 - |s^2 - 4(ax - p)|/2.
inline double f_quadratic(Complex x, Complex a, Complex p, Complex s) {
  return gram_det_closed_form(x, a, p, s);
}

/// Tetrablock via the s = 0 slice of F: min(Q(x1, x2, x3, 0), 1 - |x3|).
inline double tetra_slack_alt(Complex x1, Complex x2, Complex x3) {
  return std::min(f_quadratic(x1, x2, x3, 0.0), 1.0 - std::abs(x3));
}

struct FSlacks {
  double g2;  // (s, ax - p) in G2
  double disc;  // 1 - |p|
  double quad;  // Q > 0
  double min() const { return std::min({g2, disc, quad}); }
};

inline FSlacks f_slacks(Complex x, Complex a, Complex p, Complex s) {
  return {g2_slack(s, a * x - p), 1.0 - std::abs(p), f_quadratic(x, a, p, s)};
}

inline double f_slack(Complex x, Complex a, Complex p, Complex s) { return f_slacks(x, a, p, s).min(); }

/// Pentablock bound (1/2)|1 - conj(l2) l1| + (1/2) sqrt((1 - |l1|^2)(1 - |l2|^2)).
inline double penta_bound(Complex l1, Complex l2) {
  const double prod = (1.0 - abs2(l1)) * (1.0 - abs2(l2));
  return 0.5 * std::abs(1.0 - std::conj(l2) * l1) + 0.5 * std::sqrt(std::max(0.0, prod));
}

}  // namespace fdomain::criteria
