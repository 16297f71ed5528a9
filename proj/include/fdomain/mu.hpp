#pragma once

// Structured singular value mu_E on 2x2 matrices for a linear structure E.
//
//   mu_E(A) = 1 / inf{ ||X|| : X in E, det(I - AX) = 0 }   (0 if no such X)
//
// For a direction X in E, det(I - tAX) = 1 - t tr(AX) + t^2 det(AX) vanishes at
// t = 1/lambda for each nonzero eigenvalue lambda of AX, so the least norm on
// the ray is ||X|| / rho(AX). mu_E(A) is therefore the maximum of
// rho(AX) / ||X|| over directions X in E, and a maximizing direction scaled by
// 1/lambda_max is a minimizer of the defining infimum.

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fdomain/domain_f.hpp"
#include "fdomain/errors.hpp"
#include "fdomain/matrix2.hpp"
#include "fdomain/optimize.hpp"

namespace fdomain {

/// A complex linear subspace of M_2(C) given by a basis.
class Structure {
 public:
  Structure(std::vector<Matrix2> basis, std::string name = {}) : basis_(std::move(basis)), name_(std::move(name)) {
    if (basis_.empty() || basis_.size() > 4) {
      throw PreconditionViolation("Structure: basis must have between 1 and 4 elements");
    }
    if (real_rank(basis_) != 2 * basis_.size()) {
      throw PreconditionViolation("Structure: basis is not linearly independent");
    }
  }

  const std::vector<Matrix2>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  const std::string& name() const { return name_; }

  Matrix2 combine(const std::vector<Complex>& c) const {
    Matrix2 X{};
    for (std::size_t i = 0; i < basis_.size(); ++i) X = X + c[i] * basis_[i];
    return X;
  }

  /// Distance (Frobenius) from M to the span.
  double residual(const Matrix2& M) const {
    Eigen::MatrixXcd B(4, static_cast<Eigen::Index>(basis_.size()));
    for (std::size_t i = 0; i < basis_.size(); ++i) B.col(static_cast<Eigen::Index>(i)) = flatten(basis_[i]);
    const Eigen::VectorXcd m = flatten(M);
    const Eigen::VectorXcd c = B.completeOrthogonalDecomposition().solve(m);
    return (B * c - m).norm();
  }

  bool contains(const Matrix2& M, double tol = 1e-10) const {
    return residual(M) <= tol * std::max(1.0, std::sqrt(M.frobenius2()));
  }

  bool is_full() const { return dim() == 4; }
  bool is_scalar() const { return dim() == 1 && contains(Matrix2::identity()); }

  static Eigen::Vector4cd flatten(const Matrix2& M) { return {M.a11, M.a12, M.a21, M.a22}; }

  /// Rank of the 8 x 2k real matrix of {B_i, i B_i}; equals 2k iff independent over C.
  static std::size_t real_rank(const std::vector<Matrix2>& basis) {
    Eigen::MatrixXd R(8, static_cast<Eigen::Index>(2 * basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Eigen::Vector4cd v = flatten(basis[i]);
      const Eigen::Vector4cd iv = Complex{0.0, 1.0} * v;
      R.col(static_cast<Eigen::Index>(2 * i)) << v.real(), v.imag();
      R.col(static_cast<Eigen::Index>(2 * i + 1)) << iv.real(), iv.imag();
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(R);
    qr.setThreshold(1e-10);
    return static_cast<std::size_t>(qr.rank());
  }

 private:
  std::vector<Matrix2> basis_;
  std::string name_;
};

namespace structures {

inline Structure scalar() { return Structure({Matrix2::identity()}, "scalar"); }
inline Structure diagonal() { return Structure({Matrix2::diag(1.0, 0.0), Matrix2::diag(0.0, 1.0)}, "diag"); }
inline Structure upper_triangular() {
  return Structure({Matrix2::diag(1.0, 0.0), Matrix2::e12(), Matrix2::diag(0.0, 1.0)}, "upper");
}
inline Structure lower_triangular() {
  return Structure({Matrix2::diag(1.0, 0.0), Matrix2::e21(), Matrix2::diag(0.0, 1.0)}, "lower");
}
inline Structure full() {
  return Structure({Matrix2::diag(1.0, 0.0), Matrix2::e12(), Matrix2::e21(), Matrix2::diag(0.0, 1.0)}, "full");
}
/// { [[z1, w], [e^{i theta} w, z2]] }.
inline Structure e_theta(double theta) {
  return Structure({Matrix2::diag(1.0, 0.0), Matrix2::diag(0.0, 1.0), Matrix2{0.0, 1.0, unit_phase(theta), 0.0}},
                   "e_theta:" + std::to_string(theta));
}
/// { [[z, w1], [w2, -z]] }.
inline Structure skew_diag() {
  return Structure({Matrix2::diag(1.0, -1.0), Matrix2::e12(), Matrix2::e21()}, "skewdiag");
}

/// "scalar", "diag", "upper", "lower", "full", "skewdiag", "e_theta:<float>".
inline Structure from_name(const std::string& name) {
  if (name == "scalar") return scalar();
  if (name == "diag") return diagonal();
  if (name == "upper") return upper_triangular();
  if (name == "lower") return lower_triangular();
  if (name == "full") return full();
  if (name == "skewdiag") return skew_diag();
  const std::string prefix = "e_theta:";
  if (name.rfind(prefix, 0) == 0) {
    const std::string arg = name.substr(prefix.size());
    std::size_t used = 0;
    double theta = 0.0;
    try {
      theta = std::stod(arg, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != arg.size() || !std::isfinite(theta)) {
      throw UnknownStructure("bad angle in structure name: " + name);
    }
    return e_theta(theta);
  }
  throw UnknownStructure("unknown structure: " + name);
}

}  // namespace structures

enum class MuStatus { Exact, Numeric, Infeasible };

inline std::string_view to_string(MuStatus s) {
  switch (s) {
    case MuStatus::Exact: return "Exact";
    case MuStatus::Numeric: return "Numeric";
    case MuStatus::Infeasible: return "Infeasible";
  }
  return "?";
}

struct MuResult {
  double value = 0.0;
  std::optional<Matrix2> minimizer;
  MuStatus status = MuStatus::Infeasible;
};

struct SingularPair {
  double sigma;
  Vec2 left;   // A right = sigma left
  Vec2 right;
};

/// Top singular triple of A from the eigenvector of A*A.
inline SingularPair top_singular_pair(const Matrix2& A) {
  const double sigma = operator_norm(A);
  const Matrix2 G = A.adjoint() * A;
  const double lambda = sigma * sigma;
  // (G - lambda I) v = 0: take the larger of the two row-derived candidates
  Vec2 v1{G.a12, lambda - G.a11};
  Vec2 v2{lambda - G.a22, G.a21};
  Vec2 v = vec_norm(v1) >= vec_norm(v2) ? v1 : v2;
  double nv = vec_norm(v);
  if (nv < 1e-300) {
    v = {1.0, 0.0};
    nv = 1.0;
  }
  v = {v[0] / nv, v[1] / nv};
  Vec2 u = A.apply(v);
  const double nu = vec_norm(u);
  if (nu > 0.0) {
    u = {u[0] / nu, u[1] / nu};
  } else {
    u = {1.0, 0.0};
  }
  return {sigma, u, v};
}

namespace detail {

/// True when det(I - AX) is the constant 1 on all of E.
inline bool mu_constraint_is_constant(const Matrix2& A, const Structure& E) {
  const auto& B = E.basis();
  double scale = 1.0;
  for (const auto& b : B) scale = std::max(scale, operator_norm(A) * operator_norm(b));
  const double eps = 1e-13 * scale * scale;
  for (const auto& b : B) {
    if (std::abs((A * b).trace()) > eps) return false;
  }
  const Complex detA = A.det();
  for (std::size_t i = 0; i < B.size(); ++i) {
    for (std::size_t j = i; j < B.size(); ++j) {
      const Complex q = i == j ? B[i].det() : 0.5 * ((B[i] + B[j]).det() - B[i].det() - B[j].det());
      if (std::abs(detA * q) > eps) return false;
    }
  }
  return true;
}

inline std::vector<Complex> to_complex(const std::vector<double>& v) {
  std::vector<Complex> c(v.size() / 2);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = {v[2 * i], v[2 * i + 1]};
  return c;
}

inline std::vector<double> to_real(const std::vector<Complex>& c) {
  std::vector<double> v(2 * c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    v[2 * i] = c[i].real();
    v[2 * i + 1] = c[i].imag();
  }
  return v;
}

inline std::vector<Complex> coordinates(const Structure& E, const Matrix2& M) {
  Eigen::MatrixXcd B(4, static_cast<Eigen::Index>(E.dim()));
  for (std::size_t i = 0; i < E.dim(); ++i) B.col(static_cast<Eigen::Index>(i)) = Structure::flatten(E.basis()[i]);
  const Eigen::VectorXcd c = B.completeOrthogonalDecomposition().solve(Structure::flatten(M));
  return {c.data(), c.data() + c.size()};
}

/// X scaled by 1/lambda_max(AX) so that det(I - AX) = 0.
inline Matrix2 scaled_minimizer(const Matrix2& A, const Matrix2& X) {
  const auto ev = eigenvalues(A * X);
  const Complex lambda = std::abs(ev[0]) >= std::abs(ev[1]) ? ev[0] : ev[1];
  return (1.0 / lambda) * X;
}

}  // namespace detail

struct RigidityOptions {
  int starts = 10;
  unsigned long long seed = 0x5eedULL;
};

struct MinNormSolution {
  Matrix2 matrix;
  double norm;
};

/// Least operator norm over the affine set { X in E : X u = v }.
/// Throws InfeasibleConstraint when the set is empty.
inline MinNormSolution min_norm_with_image(const Structure& E, const Vec2& u, const Vec2& v,
                                           const RigidityOptions& opts = {}) {
  const auto k = static_cast<Eigen::Index>(E.dim());
  Eigen::MatrixXcd M(2, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const Vec2 col = E.basis()[static_cast<std::size_t>(i)].apply(u);
    M(0, i) = col[0];
    M(1, i) = col[1];
  }
  const Eigen::Vector2cd rhs(v[0], v[1]);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
  svd.setThreshold(1e-12);
  const Eigen::VectorXcd c0 = svd.solve(rhs);
  if ((M * c0 - rhs).norm() > 1e-9 * std::max(1.0, rhs.norm())) {
    throw InfeasibleConstraint("min_norm_with_image: no element of the structure maps u to v");
  }
  const Eigen::Index rank = svd.rank();
  const Eigen::MatrixXcd N = svd.matrixV().rightCols(k - rank);

  auto matrix_at = [&](const std::vector<double>& t) {
    Eigen::VectorXcd c = c0;
    for (Eigen::Index j = 0; j < N.cols(); ++j) {
      c += N.col(j) * Complex{t[static_cast<std::size_t>(2 * j)], t[static_cast<std::size_t>(2 * j + 1)]};
    }
    return E.combine({c.data(), c.data() + c.size()});
  };
  if (N.cols() == 0) {
    const Matrix2 X = matrix_at({});
    return {X, operator_norm(X)};
  }
  // the objective is convex, so every start should land on the same value
  auto f = [&](const std::vector<double>& t) { return operator_norm(matrix_at(t)); };
  Rng rng(opts.seed);
  std::normal_distribution<double> g(0.0, 0.5);
  std::vector<double> best_t;
  double best = std::numeric_limits<double>::infinity();
  for (int s = 0; s < opts.starts; ++s) {
    std::vector<double> t0(static_cast<std::size_t>(2 * N.cols()), 0.0);
    if (s > 0) {
      for (double& x : t0) x = g(rng);
    }
    const auto res = opt::nelder_mead_restarts(f, t0, 0.25, 1e-15, 1e-12, 6);
    if (res.value < best) {
      best = res.value;
      best_t = res.x;
    }
  }
  const Matrix2 X = matrix_at(best_t);
  return {X, operator_norm(X)};
}

/// A norm-one element of E with A u = v, if one exists (up to tol).
inline std::optional<Matrix2> rigidity_check(const Structure& E, const Vec2& u, const Vec2& v,
                                             double tol = 1e-7, const RigidityOptions& opts = {}) {
  if (std::abs(vec_norm(u) - 1.0) > 1e-12 || std::abs(vec_norm(v) - 1.0) > 1e-12) {
    throw PreconditionViolation("rigidity_check: u and v must be unit vectors");
  }
  try {
    const MinNormSolution sol = min_norm_with_image(E, u, v, opts);
    if (sol.norm <= 1.0 + tol) return sol.matrix;
  } catch (const InfeasibleConstraint&) {
  }
  return std::nullopt;
}

struct MuOptions {
  int starts = 20;
  unsigned long long seed = 0x5eedULL;
  int sweep_alpha = 64;
  int sweep_phi = 128;
};

/// tol bounds the residual |det(I - AX)| of the returned minimizer.
inline MuResult mu_value(const Matrix2& A, const Structure& E, double tol = 1e-7, const MuOptions& opts = {}) {
  if (!A.finite()) throw PreconditionViolation("mu_value: non-finite matrix");
  if (detail::mu_constraint_is_constant(A, E)) return {0.0, std::nullopt, MuStatus::Infeasible};

  if (E.is_full()) {
    const SingularPair sp = top_singular_pair(A);
    const Matrix2 X{sp.right[0] * std::conj(sp.left[0]) / sp.sigma, sp.right[0] * std::conj(sp.left[1]) / sp.sigma,
                    sp.right[1] * std::conj(sp.left[0]) / sp.sigma, sp.right[1] * std::conj(sp.left[1]) / sp.sigma};
    return {sp.sigma, X, MuStatus::Exact};
  }
  if (E.is_scalar()) {
    const auto ev = eigenvalues(A);
    const Complex lambda = std::abs(ev[0]) >= std::abs(ev[1]) ? ev[0] : ev[1];
    return {std::abs(lambda), (1.0 / lambda) * Matrix2::identity(), MuStatus::Exact};
  }

  auto ratio_of = [&](const Matrix2& X) {
    const double n = operator_norm(X);
    return n > 0.0 ? spectral_radius(A * X) / n : 0.0;
  };
  if (E.dim() == 1) {
    const Matrix2& X = E.basis()[0];
    return {ratio_of(X), detail::scaled_minimizer(A, X), MuStatus::Numeric};
  }

  using Coeffs = std::vector<Complex>;
  struct Candidate {
    double value = 0.0;
    Coeffs c;
    bool converged = false;
  };
  const double ftol = 1e-13 * std::max(1.0, operator_norm(A));

  // Maximize the ratio over c supported on `support`. The ratio is invariant
  // under c -> lambda c, so the largest coordinate is pinned to 1.
  auto refine = [&](const Coeffs& c0, const std::vector<std::size_t>& support, double step, int max_iter,
                    int restarts) {
    std::size_t pivot = support.front();
    for (std::size_t i : support) {
      if (std::abs(c0[i]) > std::abs(c0[pivot])) pivot = i;
    }
    std::vector<std::size_t> free;
    std::vector<double> v0;
    for (std::size_t i : support) {
      if (i == pivot) continue;
      free.push_back(i);
      const Complex z = c0[i] / c0[pivot];
      v0.push_back(z.real());
      v0.push_back(z.imag());
    }
    auto expand = [&](const std::vector<double>& v) {
      Coeffs c(E.dim(), Complex{0.0});
      c[pivot] = 1.0;
      for (std::size_t j = 0; j < free.size(); ++j) c[free[j]] = {v[2 * j], v[2 * j + 1]};
      return c;
    };
    auto f = [&](const std::vector<double>& v) { return -ratio_of(E.combine(expand(v))); };
    opt::SimplexResult res = restarts > 1 ? opt::nelder_mead_restarts(f, v0, step, ftol, 1e-8, restarts, max_iter)
                                          : opt::nelder_mead(f, v0, step, ftol, 1e-8, max_iter);
    if (restarts > 1 && !res.converged) {
      // a stalled simplex on a ridge still counts once a fresh restart gains nothing
      const auto polish = opt::nelder_mead(f, res.x, 1e-3, ftol, 1e-8, 2000);
      res.converged = res.value - polish.value <= 1e-10 * std::max(1.0, -res.value);
      if (polish.value < res.value) {
        res.x = polish.x;
        res.value = polish.value;
      }
    }
    return Candidate{-res.value, expand(res.x), res.converged};
  };

  // grid over the projective line through B_i, B_j: c = (cos t) e_i + (e^{i phi} sin t) e_j
  auto sweep_pair = [&](std::size_t i, std::size_t j, std::size_t keep) {
    std::vector<Candidate> cells;
    for (int a = 0; a <= opts.sweep_alpha; ++a) {
      const double t = 0.5 * kPi * a / opts.sweep_alpha;
      for (int b = 0; b < opts.sweep_phi; ++b) {
        Coeffs c(E.dim(), Complex{0.0});
        c[i] = std::cos(t);
        c[j] = std::polar(std::sin(t), 2.0 * kPi * b / opts.sweep_phi);
        cells.push_back({ratio_of(E.combine(c)), c, false});
        if (a == 0) break;
      }
    }
    keep = std::min(keep, cells.size());
    std::partial_sort(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(keep), cells.end(),
                      [](const Candidate& u, const Candidate& v) { return u.value > v.value; });
    cells.resize(keep);
    return cells;
  };

  std::vector<std::size_t> all(E.dim());
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::vector<Coeffs> starts;
  if (E.dim() == 2) {
    for (const auto& cell : sweep_pair(0, 1, 5)) starts.push_back(cell.c);
  } else {
    // candidates from the unstructured optimum: X u1 = v1 with A v1 = sigma u1
    const SingularPair sp = top_singular_pair(A);
    const Matrix2 rank_one{sp.right[0] * std::conj(sp.left[0]), sp.right[0] * std::conj(sp.left[1]),
                           sp.right[1] * std::conj(sp.left[0]), sp.right[1] * std::conj(sp.left[1])};
    starts.push_back(detail::coordinates(E, rank_one));
    try {
      const MinNormSolution sol = min_norm_with_image(E, sp.left, sp.right, {4, opts.seed});
      starts.push_back(detail::coordinates(E, sol.matrix));
    } catch (const InfeasibleConstraint&) {
    }
    // optima on two-element sub-spans; maxima often sit on such kinks
    for (std::size_t i = 0; i < E.dim(); ++i) {
      for (std::size_t j = i + 1; j < E.dim(); ++j) {
        const Candidate cell = sweep_pair(i, j, 1).front();
        starts.push_back(refine(cell.c, {i, j}, 0.05, 2000, 3).c);
      }
    }
    Rng rng(opts.seed);
    for (int s = 0; s < opts.starts; ++s) {
      Coeffs c(E.dim());
      for (auto& x : c) x = complex_gaussian(rng);
      starts.push_back(c);
    }
  }

  std::vector<Candidate> scouts;
  for (const Coeffs& c0 : starts) {
    if (std::all_of(c0.begin(), c0.end(), [](Complex z) { return z == Complex{0.0}; })) continue;
    scouts.push_back(refine(c0, all, 0.2, 150, 1));
  }
  if (scouts.empty()) throw OptimizerNoConverge("mu_value: no usable starting direction");
  std::sort(scouts.begin(), scouts.end(), [](const Candidate& u, const Candidate& v) { return u.value > v.value; });
  if (scouts.size() > 3) scouts.resize(3);

  Candidate best;
  for (const Candidate& sc : scouts) {
    const Candidate res = refine(sc.c, all, 0.05, 5000, 4);
    if (res.value > best.value) best = res;
  }
  if (best.value <= 0.0) throw OptimizerNoConverge("mu_value: no direction with nonzero spectral radius found");
  if (!best.converged) throw OptimizerNoConverge("mu_value: refinement did not converge");
  const Matrix2 X = detail::scaled_minimizer(A, E.combine(best.c));
  if (std::abs((Matrix2::identity() - A * X).det()) > tol) {
    throw OptimizerNoConverge("mu_value: minimizer misses the constraint det(I - AX) = 0");
  }
  return {best.value, X, MuStatus::Numeric};
}

/// r(A) <= mu_E(A) <= ||A||, valid when the identity lies in E.
inline bool mu_sandwich_check(const Matrix2& A, const Structure& E, double tol = 1e-7) {
  if (!E.contains(Matrix2::identity())) throw PreconditionViolation("mu_sandwich_check: identity is not in E");
  const double mu = mu_value(A, E).value;
  const double scale = std::max(1.0, operator_norm(A));
  return spectral_radius(A) - tol * scale <= mu && mu <= operator_norm(A) + tol * scale;
}

struct MuNormFailure {
  Matrix2 A;
  double mu;
  double norm;
};

struct RigidityFailure {
  Vec2 u, v;
};

struct MuNormReport {
  std::size_t samples = 0;
  std::size_t rigidity_pairs = 0;
  std::vector<MuNormFailure> failures;
  std::vector<RigidityFailure> rigidity_failures;
  bool passed() const { return failures.empty() && rigidity_failures.empty(); }
};

inline Vec2 random_unit_vector(Rng& rng) {
  Vec2 v;
  double n = 0.0;
  do {
    v = {complex_gaussian(rng), complex_gaussian(rng)};
    n = vec_norm(v);
  } while (n < 1e-12);
  return {v[0] / n, v[1] / n};
}

/// Checks mu_E(A) = ||A|| on E12, E21 and n random matrices of mixed scale, and
/// rigidity on (e1, e2), (e2, e1) and random unit-vector pairs.
inline MuNormReport mu_equals_norm_suite(const Structure& E, int n_samples, unsigned long long seed,
                                         double tol = 1e-6) {
  MuNormReport rep;
  Rng rng(seed);
  std::uniform_real_distribution<double> exponent(-1.0, 1.0);
  std::vector<Matrix2> samples{Matrix2::e12(), Matrix2::e21()};
  for (int i = 0; i < n_samples; ++i) samples.push_back(std::pow(10.0, exponent(rng)) * random_gaussian_matrix(rng));
  for (const Matrix2& A : samples) {
    const double norm = operator_norm(A);
    const double mu = mu_value(A, E).value;
    if (std::abs(mu - norm) > tol * norm) rep.failures.push_back({A, mu, norm});
  }
  rep.samples = samples.size();

  std::vector<std::pair<Vec2, Vec2>> pairs{{Vec2{1.0, 0.0}, Vec2{0.0, 1.0}}, {Vec2{0.0, 1.0}, Vec2{1.0, 0.0}}};
  const int n_pairs = std::min(n_samples, 50);
  for (int i = 0; i < n_pairs; ++i) pairs.emplace_back(random_unit_vector(rng), random_unit_vector(rng));
  for (const auto& [u, v] : pairs) {
    if (!rigidity_check(E, u, v)) rep.rigidity_failures.push_back({u, v});
  }
  rep.rigidity_pairs = pairs.size();
  return rep;
}

/// pt in F_{mu_E}: the preimage B or its transpose has mu_E < 1.
inline bool f_mu_membership(const PointF& pt, const Structure& E, double tol = kDefaultTol) {
  const Matrix2 B = f_reconstruct_matrix(pt);
  return mu_value(B, E).value < 1.0 - tol || mu_value(B.transpose(), E).value < 1.0 - tol;
}

struct SubspaceClass {
  bool is_etheta = false;
  double theta = 0.0;
};

/// For a 3-dimensional E containing the diagonal matrices: E = E_theta iff the
/// off-diagonal generator [[0, alpha], [beta, 0]] has |alpha| = |beta| != 0,
/// with theta = arg(beta / alpha).
inline SubspaceClass classify_subspace(const Structure& E, double tol = 1e-9) {
  if (E.dim() != 3 || !E.contains(Matrix2::diag(1.0, 0.0)) || !E.contains(Matrix2::diag(0.0, 1.0))) {
    throw PreconditionViolation("classify_subspace: requires a 3-dimensional structure containing E_diag");
  }
  Complex alpha{}, beta{};
  double best = -1.0;
  for (const Matrix2& b : E.basis()) {
    const double w = abs2(b.a12) + abs2(b.a21);
    if (w > best) {
      best = w;
      alpha = b.a12;
      beta = b.a21;
    }
  }
  const double scale = std::max(std::abs(alpha), std::abs(beta));
  SubspaceClass out;
  if (std::min(std::abs(alpha), std::abs(beta)) > tol * scale &&
      std::abs(std::abs(alpha) - std::abs(beta)) <= tol * scale) {
    out.is_etheta = true;
    out.theta = std::arg(beta / alpha);
  }
  return out;
}

/// E12 or E21, whichever has mu_E != ||.|| = 1; nullopt if neither does.
inline std::optional<Matrix2> classification_witness(const Structure& E, double tol = 1e-6) {
  for (const Matrix2& W : {Matrix2::e12(), Matrix2::e21()}) {
    if (std::abs(mu_value(W, E).value - 1.0) > tol) return W;
  }
  return std::nullopt;
}

}  // namespace fdomain
