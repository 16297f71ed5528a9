#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

namespace fdomain::opt {

struct ScalarOptimum {
  double x;
  double value;
};

/// Golden-section search for the maximum of a unimodal f on [lo, hi].
template <typename F>
ScalarOptimum golden_section_max(F&& f, double lo, double hi, double xtol, int max_iter = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < max_iter && (hi - lo) > xtol; ++i) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return fc > fd ? ScalarOptimum{c, fc} : ScalarOptimum{d, fd};
}

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Nelder-Mead minimization. Converges when the spread of simplex values drops below ftol
/// and the simplex diameter below xtol.
template <typename F>
SimplexResult nelder_mead(F&& f, std::vector<double> x0, double step, double ftol, double xtol,
                          int max_iter = 5000) {
  const std::size_t n = x0.size();
  std::vector<std::vector<double>> simplex(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += step;
  std::vector<double> fv(n + 1);
  for (std::size_t i = 0; i <= n; ++i) fv[i] = f(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  SimplexResult res;
  std::vector<double> centroid(n), trial(n), trial2(n);
  int it = 0;
  for (; it < max_iter; ++it) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[n - 1];

    double diam = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; j < n; ++j) diam = std::max(diam, std::abs(simplex[i][j] - simplex[best][j]));
    }
    if (std::abs(fv[worst] - fv[best]) <= ftol && diam <= xtol) {
      res.converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j] / static_cast<double>(n);
    }
    for (std::size_t j = 0; j < n; ++j) trial[j] = centroid[j] + (centroid[j] - simplex[worst][j]);
    const double fr = f(trial);
    if (fr < fv[best]) {
      for (std::size_t j = 0; j < n; ++j) trial2[j] = centroid[j] + 2.0 * (centroid[j] - simplex[worst][j]);
      const double fe = f(trial2);
      if (fe < fr) {
        simplex[worst] = trial2;
        fv[worst] = fe;
      } else {
        simplex[worst] = trial;
        fv[worst] = fr;
      }
    } else if (fr < fv[second]) {
      simplex[worst] = trial;
      fv[worst] = fr;
    } else {
      const bool outside = fr < fv[worst];
      for (std::size_t j = 0; j < n; ++j) {
        trial2[j] = outside ? centroid[j] + 0.5 * (trial[j] - centroid[j])
                            : centroid[j] + 0.5 * (simplex[worst][j] - centroid[j]);
      }
      const double fc = f(trial2);
      if (fc < std::min(fr, fv[worst])) {
        simplex[worst] = trial2;
        fv[worst] = fc;
      } else {
        // shrink toward the best vertex
        for (std::size_t i = 0; i <= n; ++i) {
          if (i == best) continue;
          for (std::size_t j = 0; j < n; ++j) simplex[i][j] = simplex[best][j] + 0.5 * (simplex[i][j] - simplex[best][j]);
          fv[i] = f(simplex[i]);
        }
      }
    }
  }
  const auto best_it = std::min_element(fv.begin(), fv.end());
  res.x = simplex[static_cast<std::size_t>(best_it - fv.begin())];
  res.value = *best_it;
  res.iterations = it;
  return res;
}

/// Nelder-Mead restarted from the incumbent with a step shrinking tenfold each round.
template <typename F>
SimplexResult nelder_mead_restarts(F&& f, std::vector<double> x0, double step, double ftol, double xtol,
                                   int restarts = 4, int max_iter = 5000) {
  SimplexResult best = nelder_mead(f, std::move(x0), step, ftol, xtol, max_iter);
  for (int r = 1; r < restarts; ++r) {
    step *= 0.1;
    SimplexResult next = nelder_mead(f, best.x, step, ftol, xtol, max_iter);
    if (next.value <= best.value) {
      const bool stalled = best.value - next.value <= ftol;
      best = std::move(next);
      if (stalled && best.converged) break;
    }
  }
  return best;
}

struct VectorOptimum {
  std::vector<double> x;
  double value = 0.0;
  int sweeps = 0;
  bool converged = false;
};

/// Coordinate-wise golden-section ascent. Each sweep maximizes f along every
/// coordinate inside [x_j - h, x_j + h]; h halves once no coordinate moved by
/// more than h/2. Converged when h < xtol.
template <typename F>
VectorOptimum coordinate_refine_max(F&& f, std::vector<double> x, double h, double xtol, int max_sweeps = 2000) {
  VectorOptimum out;
  double fx = f(x);
  std::vector<double> probe = x;
  int sweep = 0;
  for (; sweep < max_sweeps && h >= xtol; ++sweep) {
    double moved = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      probe = x;
      auto line = [&](double t) {
        probe[j] = t;
        return f(probe);
      };
      const ScalarOptimum best = golden_section_max(line, x[j] - h, x[j] + h, 0.05 * xtol);
      if (best.value > fx) {
        moved = std::max(moved, std::abs(best.x - x[j]));
        x[j] = best.x;
        fx = best.value;
      }
    }
    if (moved < 0.5 * h) h *= 0.5;
  }
  out.x = std::move(x);
  out.value = fx;
  out.sweeps = sweep;
  out.converged = h < xtol;
  return out;
}

}  // namespace fdomain::opt
