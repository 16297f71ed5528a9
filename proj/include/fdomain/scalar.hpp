#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <utility>

namespace fdomain {

using Complex = std::complex<double>;
using Rng = std::mt19937_64;

inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kPi = 3.14159265358979323846;

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline double abs2(Complex z) { return std::norm(z); }

/// Descending lexicographic order on (re, im).
inline bool lex_greater(Complex u, Complex v) {
  if (u.real() != v.real()) return u.real() > v.real();
  return u.imag() > v.imag();
}

/// Roots of t^2 - s t + p = 0, computed without cancellation and returned in
/// descending lexicographic order.
inline std::pair<Complex, Complex> quadratic_roots(Complex s, Complex p) {
  const Complex sq = std::sqrt(s * s - 4.0 * p);
  // pick the sign that adds |s| and |sq| constructively
  const Complex big = (std::real(std::conj(s) * sq) >= 0.0) ? 0.5 * (s + sq) : 0.5 * (s - sq);
  Complex small;
  if (std::abs(big) > 0.0) {
    small = p / big;
  } else {
    small = 0.0;
  }
  if (lex_greater(small, big)) return {small, big};
  return {big, small};
}

inline Complex complex_gaussian(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

inline Complex unit_phase(double theta) { return std::polar(1.0, theta); }

}  // namespace fdomain
