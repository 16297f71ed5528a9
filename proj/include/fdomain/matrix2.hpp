#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "fdomain/errors.hpp"
#include "fdomain/scalar.hpp"

namespace fdomain {

using Vec2 = std::array<Complex, 2>;

/// A 2x2 complex matrix stored row-major.
struct Matrix2 {
  Complex a11{}, a12{}, a21{}, a22{};

  static constexpr Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr Matrix2 zero() { return {}; }
  static constexpr Matrix2 diag(Complex d1, Complex d2) { return {d1, 0.0, 0.0, d2}; }
  static constexpr Matrix2 e12() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Matrix2 e21() { return {0.0, 0.0, 1.0, 0.0}; }

  Complex det() const { return a11 * a22 - a12 * a21; }
  Complex trace() const { return a11 + a22; }
  Matrix2 transpose() const { return {a11, a21, a12, a22}; }
  Matrix2 adjoint() const { return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)}; }
  double frobenius2() const { return abs2(a11) + abs2(a12) + abs2(a21) + abs2(a22); }
  bool finite() const { return is_finite(a11) && is_finite(a12) && is_finite(a21) && is_finite(a22); }

  Vec2 apply(const Vec2& v) const { return {a11 * v[0] + a12 * v[1], a21 * v[0] + a22 * v[1]}; }

  friend Matrix2 operator+(const Matrix2& x, const Matrix2& y) {
    return {x.a11 + y.a11, x.a12 + y.a12, x.a21 + y.a21, x.a22 + y.a22};
  }
  friend Matrix2 operator-(const Matrix2& x, const Matrix2& y) {
    return {x.a11 - y.a11, x.a12 - y.a12, x.a21 - y.a21, x.a22 - y.a22};
  }
  friend Matrix2 operator*(Complex c, const Matrix2& x) { return {c * x.a11, c * x.a12, c * x.a21, c * x.a22}; }
  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
            x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
  }
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

inline double max_abs_diff(const Matrix2& x, const Matrix2& y) {
  return std::max({std::abs(x.a11 - y.a11), std::abs(x.a12 - y.a12), std::abs(x.a21 - y.a21),
                   std::abs(x.a22 - y.a22)});
}

inline double vec_norm(const Vec2& v) { return std::sqrt(abs2(v[0]) + abs2(v[1])); }

/// Singular values (largest first) from the closed-form eigenvalues of A*A.
inline std::array<double, 2> singular_values(const Matrix2& A) {
  const double p = abs2(A.a11) + abs2(A.a21);
  const double r = abs2(A.a12) + abs2(A.a22);
  const Complex q = std::conj(A.a11) * A.a12 + std::conj(A.a21) * A.a22;
  const double half_sum = 0.5 * (p + r);
  const double rad = std::hypot(0.5 * (p - r), std::abs(q));
  const double smax = std::sqrt(half_sum + rad);
  // |det A| = s1 s2 avoids cancellation in half_sum - rad
  const double smin = smax > 0.0 ? std::abs(A.det()) / smax : 0.0;
  return {smax, std::min(smin, smax)};
}

inline double operator_norm(const Matrix2& A) { return singular_values(A)[0]; }

inline std::array<Complex, 2> eigenvalues(const Matrix2& A) {
  const auto [l1, l2] = quadratic_roots(A.trace(), A.det());
  return {l1, l2};
}

inline double spectral_radius(const Matrix2& A) {
  const auto ev = eigenvalues(A);
  return std::max(std::abs(ev[0]), std::abs(ev[1]));
}

struct GramReport {
  double det_gram;
  double trace_gram;
  double norm;
};

/// det(I - B*B) from the coordinates (x, a, p, s) = (b11, b22, det B, b12 + b21).
inline double gram_det_closed_form(Complex x, Complex a, Complex p, Complex s) {
  return 1.0 - abs2(a) - abs2(x) + abs2(p) - 0.5 * abs2(s) - 0.5 * std::abs(s * s - 4.0 * (a * x - p));
}

inline double gram_det_direct(const Matrix2& B) {
  const Matrix2 G = Matrix2::identity() - B.adjoint() * B;
  return G.det().real();
}

/// Evaluates det(I - B*B) both directly and through the coordinate closed form.
/// Throws FormulaMismatch if the two routes disagree.
inline GramReport gram_report(const Matrix2& B) {
  if (!B.finite()) throw PreconditionViolation("gram_report: non-finite entries");
  const double direct = gram_det_direct(B);
  const double closed = gram_det_closed_form(B.a11, B.a22, B.det(), B.a12 + B.a21);
  const double scale = std::max(1.0, B.frobenius2() * B.frobenius2());
  if (std::abs(direct - closed) > 1e-10 * scale) {
    throw FormulaMismatch("gram_report: direct " + std::to_string(direct) + " vs closed form " +
                          std::to_string(closed));
  }
  return {direct, 2.0 - B.frobenius2(), operator_norm(B)};
}

/// ||B|| < 1 (strict) or ||B|| <= 1 via the sign of det(I - B*B); valid only for |det B| <= 1.
inline bool contraction_test(const Matrix2& B, bool strict, double tol = kDefaultTol) {
  if (std::abs(B.det()) > 1.0 + tol) {
    throw PreconditionViolation("contraction_test: |det B| exceeds 1");
  }
  const double g = gram_report(B).det_gram;
  return strict ? g > tol : g >= -tol;
}

/// Unitary from Gram-Schmidt on complex Gaussian columns; first pivot made real positive.
inline Matrix2 random_unitary(Rng& rng) {
  Vec2 c1, c2;
  double n1 = 0.0;
  do {
    c1 = {complex_gaussian(rng), complex_gaussian(rng)};
    n1 = vec_norm(c1);
  } while (n1 < 1e-12);
  const Complex phase = std::abs(c1[0]) > 0.0 ? std::conj(c1[0]) / std::abs(c1[0]) : Complex{1.0};
  c1 = {phase * c1[0] / n1, phase * c1[1] / n1};
  double n2 = 0.0;
  do {
    c2 = {complex_gaussian(rng), complex_gaussian(rng)};
    const Complex proj = std::conj(c1[0]) * c2[0] + std::conj(c1[1]) * c2[1];
    c2 = {c2[0] - proj * c1[0], c2[1] - proj * c1[1]};
    n2 = vec_norm(c2);
  } while (n2 < 1e-12);
  c2 = {c2[0] / n2, c2[1] / n2};
  return {c1[0], c2[0], c1[1], c2[1]};
}

/// U diag(s1, s2) V* with singular values uniform on [0, 1).
inline Matrix2 random_contraction(Rng& rng) {
  const Matrix2 U = random_unitary(rng);
  const Matrix2 V = random_unitary(rng);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double s1 = u01(rng);
  const double s2 = u01(rng);
  return U * Matrix2::diag(s1, s2) * V.adjoint();
}

/// Same construction with singular values uniform on [0, smax).
inline Matrix2 random_matrix_with_norm_below(Rng& rng, double smax) {
  const Matrix2 U = random_unitary(rng);
  const Matrix2 V = random_unitary(rng);
  std::uniform_real_distribution<double> u(0.0, smax);
  return U * Matrix2::diag(u(rng), u(rng)) * V.adjoint();
}

inline Matrix2 random_gaussian_matrix(Rng& rng) {
  return {complex_gaussian(rng), complex_gaussian(rng), complex_gaussian(rng), complex_gaussian(rng)};
}

inline Matrix2 random_unitary(unsigned long long seed) {
  Rng rng(seed);
  return random_unitary(rng);
}

inline Matrix2 random_contraction(unsigned long long seed) {
  Rng rng(seed);
  return random_contraction(rng);
}

}  // namespace fdomain
