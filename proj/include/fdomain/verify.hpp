#pragma once

// Seeded property suites, one per claim about the domains and mu, with
// reproducible failure records.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "fdomain/classical.hpp"
#include "fdomain/domain_f.hpp"
#include "fdomain/errors.hpp"
#include "fdomain/hexablock.hpp"
#include "fdomain/io.hpp"
#include "fdomain/lie_ball.hpp"
#include "fdomain/matrix2.hpp"
#include "fdomain/mu.hpp"

namespace fdomain::verify {

struct FailureRecord {
  std::string input;
  std::string observed;
  std::string expected;
  friend bool operator<(const FailureRecord& l, const FailureRecord& r) {
    return std::tie(l.input, l.observed, l.expected) < std::tie(r.input, r.observed, r.expected);
  }
};

struct SuiteReport {
  std::string suite;
  int n_samples = 0;
  unsigned long long seed = 0;
  double tol = 0.0;
  std::vector<FailureRecord> failures;
  std::size_t checked = 0;
  std::size_t excluded = 0;  // samples within the classification band
  double elapsed_seconds = 0.0;
  bool passed() const { return failures.empty(); }
};

// ---------------------------------------------------------------------------
// samplers

namespace sample {

inline Complex in_disc(Rng& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(radius * std::sqrt(u(rng)), 2.0 * kPi * u(rng));
}

inline ShilovParamF shilov_param(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ShilovParamF q;
  q.theta = kPi * (u(rng) + 1.0);
  do {
    q.x2 = u(rng);
    q.x3 = u(rng);
    q.x4 = u(rng);
  } while (q.x2 * q.x2 + q.x3 * q.x3 + q.x4 * q.x4 > 1.0);
  return q;
}

inline BallParamF ball_param(Rng& rng) {
  Complex z, w;
  do {
    z = in_disc(rng, 1.0);
    w = in_disc(rng, 1.0);
  } while (abs2(z) + abs2(w) > 1.0);
  std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
  return {z, w, unit_phase(u(rng))};
}

/// U diag(1, sigma) V* with sigma uniform in [0, 1]: norm exactly one.
inline Matrix2 norm_one_matrix(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return random_unitary(rng) * Matrix2::diag(1.0, u(rng)) * random_unitary(rng).adjoint();
}

inline PointF box_point(Rng& rng) {
  return {in_disc(rng, 2.5), in_disc(rng, 2.5), in_disc(rng, 1.5), in_disc(rng, 2.5)};
}

/// Interior-dense images, boundary parametrizations and box noise in equal parts.
inline PointF mixed_point(Rng& rng) {
  switch (rng() % 3) {
    case 0: return pi_F(random_matrix_with_norm_below(rng, 2.0));
    case 1: return rng() % 2 ? shilov_f_param(shilov_param(rng)) : pi_F(norm_one_matrix(rng));
    default: return box_point(rng);
  }
}

/// Points of the closure of F.
inline PointF closure_point(Rng& rng) {
  switch (rng() % 4) {
    case 0: return pi_F(random_contraction(rng));
    case 1: return pi_F(norm_one_matrix(rng));
    case 2: return shilov_f_param(shilov_param(rng));
    default: return shilov_f_from_ball(ball_param(rng));
  }
}

inline PointTetra tetra_point(Rng& rng) {
  if (rng() % 2) {
    const Matrix2 A = random_matrix_with_norm_below(rng, 1.5);
    return {A.a11, A.a22, A.det()};
  }
  return {in_disc(rng, 1.5), in_disc(rng, 1.5), in_disc(rng, 1.5)};
}

/// z in C^4 with |z| < 1 (not necessarily in the Lie ball).
inline PointCn c4_point(Rng& rng) {
  PointCn z(4);
  double n2 = 0.0;
  do {
    for (auto& c : z) c = in_disc(rng, 1.0);
    n2 = norm2(z);
  } while (n2 >= 1.0);
  return z;
}

/// (cos t, e^{i phi} sin t) on a rows x cols grid of (t, phi).
inline std::vector<Vec2> unit_vector_grid(int rows, int cols) {
  std::vector<Vec2> out;
  for (int i = 0; i < rows; ++i) {
    const double t = 0.5 * kPi * i / (rows - 1);
    for (int j = 0; j < cols; ++j) {
      const double phi = 2.0 * kPi * j / cols;
      out.push_back({std::cos(t), std::polar(std::sin(t), phi)});
    }
  }
  return out;
}

}  // namespace sample

// ---------------------------------------------------------------------------
// formatting helpers

inline std::string fmt(const PointF& p) { return "F" + io::format_tuple({p.x, p.a, p.p, p.s}); }
inline std::string fmt(const PointTetra& p) { return "E" + io::format_tuple({p.x1, p.x2, p.x3}); }
inline std::string fmt(const PointH& p) { return "H" + io::format_tuple({p.a, p.x1, p.x2, p.x3}); }
inline std::string fmt(const Matrix2& A) { return io::format_matrix(A); }
inline std::string fmt(const ShilovParamF& q) {
  return "theta=" + io::format_real(q.theta) + " x=(" + io::format_real(q.x2) + ", " + io::format_real(q.x3) +
         ", " + io::format_real(q.x4) + ")";
}
inline std::string fmt(double v) { return io::format_real(v); }
inline std::string fmt_bool(bool b) { return b ? "true" : "false"; }

class Context {
 public:
  Context(SuiteReport& rep) : rep_(rep), rng_(rep.seed) {}
  Rng& rng() { return rng_; }
  int n() const { return rep_.n_samples; }
  double tol() const { return rep_.tol; }
  double band() const { return 10.0 * rep_.tol; }
  void exclude() { ++rep_.excluded; }
  void check(bool ok, const std::string& input, const std::string& observed, const std::string& expected) {
    ++rep_.checked;
    if (!ok) rep_.failures.push_back({input, observed, expected});
  }

 private:
  SuiteReport& rep_;
  Rng rng_;
};

using SuiteFn = std::function<void(Context&)>;

struct SuiteInfo {
  std::string name;
  int default_n;
  SuiteFn run;
};

// ---------------------------------------------------------------------------
// suites

namespace suites {

inline void lemma21_gram(Context& c) {
  for (int i = 0; i < c.n(); ++i) {
    const Matrix2 B = i % 2 ? random_gaussian_matrix(c.rng()) : random_matrix_with_norm_below(c.rng(), 2.0);
    const double direct = gram_det_direct(B);
    const double closed = gram_det_closed_form(B.a11, B.a22, B.det(), B.a12 + B.a21);
    c.check(std::abs(direct - closed) <= 1e-10 * std::max(1.0, B.frobenius2() * B.frobenius2()), fmt(B),
            "direct=" + fmt(direct), "closed=" + fmt(closed));
    if (std::abs(B.det()) <= 1.0) {
      const double trace = 2.0 - B.frobenius2();
      const double rhs = direct + (1.0 - abs2(B.det()));
      c.check(std::abs(trace - rhs) <= 1e-10 * std::max(1.0, B.frobenius2()), fmt(B), "trace=" + fmt(trace),
              "det_gram+1-|p|^2=" + fmt(rhs));
    }
  }
}

inline void prop22_vs_oracle(Context& c) {
  for (int i = 0; i < c.n(); ++i) {
    const PointF pt = sample::mixed_point(c.rng());
    const double m = criteria::f_slack(pt.x, pt.a, pt.p, pt.s);
    const double m_oracle = 1.0 - operator_norm(f_reconstruct_matrix(pt));
    if (std::abs(m) <= c.band() || std::abs(m_oracle) <= c.band()) {
      c.exclude();
      continue;
    }
    c.check((m > 0) == (m_oracle > 0), fmt(pt), "criteria margin=" + fmt(m), "matrix margin=" + fmt(m_oracle));
  }
}

/// pi_F(A) interior iff ||A|| < 1, with norms spread over (0, 2).
inline void image_characterization(Context& c, int count) {
  for (int i = 0; i < count; ++i) {
    const Matrix2 A = random_matrix_with_norm_below(c.rng(), 2.0);
    const double norm = operator_norm(A);
    const MembershipVerdict v = f_classify(pi_F(A), c.tol());
    if (std::abs(v.margin) <= c.band() || std::abs(1.0 - norm) <= c.band()) {
      c.exclude();
      continue;
    }
    c.check(v.interior() == (norm < 1.0), fmt(A), "region=" + std::string(to_string(v.region)),
            "norm=" + fmt(norm));
  }
}

inline void prop24_closure(Context& c) {
  for (int i = 0; i < c.n(); ++i) {
    const PointF pt = i % 2 ? sample::closure_point(c.rng()) : sample::mixed_point(c.rng());
    const MembershipVerdict v = f_classify(pt, c.tol());
    const double norm = operator_norm(f_reconstruct_matrix(pt));
    if (std::abs(1.0 - norm) <= c.band()) {
      // on the boundary both sides must still place the point in the closure
      c.check(v.in_closure(), fmt(pt), "region=" + std::string(to_string(v.region)), "closure (norm=1)");
      continue;
    }
    if (std::abs(v.margin) <= c.band()) {
      c.exclude();
      continue;
    }
    c.check(v.in_closure() == (norm <= 1.0), fmt(pt), "region=" + std::string(to_string(v.region)),
            "norm=" + fmt(norm));
  }
}

inline void swap_involution(Context& c) {
  for (int i = 0; i < c.n(); ++i) {
    const PointF pt = sample::mixed_point(c.rng());
    const PointF sw = f_swap(pt);
    const PointF sw2 = f_swap(sw);
    const double m0 = criteria::f_slack(pt.x, pt.a, pt.p, pt.s);
    const double m1 = criteria::f_slack(sw.x, sw.a, sw.p, sw.s);
    const double m2 = criteria::f_slack(sw2.x, sw2.a, sw2.p, sw2.s);
    if (std::min({std::abs(m0), std::abs(m1), std::abs(m2)}) <= c.band()) {
      c.exclude();
      continue;
    }
    c.check((m0 > 0) == (m1 > 0) && (m0 > 0) == (m2 > 0), fmt(pt),
            "margins " + fmt(m0) + ", " + fmt(m1) + ", " + fmt(m2), "same sign");
  }
}

inline void lemma25_scaling(Context& c) {
  std::uniform_real_distribution<double> ur(0.0, 1.0);
  for (int i = 0; i < c.n(); ++i) {
    const PointF pt = sample::closure_point(c.rng());
    double r = ur(c.rng());
    while (r <= 0.0) r = ur(c.rng());
    const PointF sc = f_scale(pt, r);
    const double m = criteria::f_slack(sc.x, sc.a, sc.p, sc.s);
    if (std::abs(m) <= c.band()) {
      c.exclude();
      continue;
    }
    c.check(m > 0.0, fmt(pt) + " r=" + fmt(r), "margin=" + fmt(m), "interior");
  }
  // Minkowski gauge: < 1 iff interior, 1 on the Shilov boundary, weighted homogeneity.
  // Where Q has a double root along the ray the bisection resolves t to about 1e-8.
  const int m = std::max(1, c.n() / 10);
  for (int i = 0; i < m; ++i) {
    const PointF pt = sample::mixed_point(c.rng());
    const double g = minkowski_gauge(pt, 1e-13);
    const double margin = criteria::f_slack(pt.x, pt.a, pt.p, pt.s);
    if (std::abs(g - 1.0) > 1e-6 && std::abs(margin) > c.band()) {
      c.check((g < 1.0) == (margin > 0.0), fmt(pt), "gauge=" + fmt(g), "margin=" + fmt(margin));
    } else {
      c.exclude();
    }
    const Complex alpha = sample::in_disc(c.rng(), 2.0);
    const PointF w{alpha * pt.x, alpha * pt.a, alpha * alpha * pt.p, alpha * pt.s};
    const double gw = minkowski_gauge(w, 1e-13);
    c.check(std::abs(gw - std::abs(alpha) * g) <= 1e-7 * std::max(1.0, gw), fmt(pt) + " alpha=" + io::format_complex(alpha),
            "gauge(alpha.pt)=" + fmt(gw), "|alpha| gauge(pt)=" + fmt(std::abs(alpha) * g));
    const ShilovParamF q = sample::shilov_param(c.rng());
    const double gb = minkowski_gauge(shilov_f_param(q), 1e-13);
    c.check(std::abs(gb - 1.0) <= 1e-7, fmt(q), "gauge=" + fmt(gb), "1");
  }
}

inline void thm29_projections(Context& c) {
  for (int i = 0; i < c.n(); ++i) {
    const PointF pt = pi_F(random_matrix_with_norm_below(c.rng(), 1.0));
    const MembershipVerdict v = f_classify(pt, c.tol());
    if (v.margin <= c.band()) {
      c.exclude();
      continue;
    }
    const FRelations rel = f_relations(pt);
    const bool g2 = g2_classify(rel.g2, c.tol()).interior();
    const bool tetra = tetra_classify(rel.tetra, c.tol()).interior();
    const bool penta = penta_classify(rel.penta, c.tol(), {i % 10 == 0, {}}).interior();
    c.check(g2 && tetra && penta, fmt(pt),
            "g2=" + fmt_bool(g2) + " tetra=" + fmt_bool(tetra) + " penta=" + fmt_bool(penta), "all interior");
  }
}

inline void prop210_slice(Context& c) {
  for (int i = 0; i < c.n(); ++i) {
    const PointTetra x = sample::tetra_point(c.rng());
    const MembershipVerdict t = tetra_classify(x, c.tol());
    const double mf = criteria::f_slack(x.x1, x.x2, x.x3, 0.0);
    if (std::abs(t.margin) <= c.band() || std::abs(mf) <= c.band()) {
      c.exclude();
      continue;
    }
    const bool f = f_slice_s_zero(x.x1, x.x2, x.x3, c.tol());
    const bool h = hexa_classify({0.0, x.x1, x.x2, x.x3}, c.tol()).verdict.interior();
    c.check(t.interior() == f && f == h, fmt(x),
            "tetra=" + fmt_bool(t.interior()) + " f=" + fmt_bool(f) + " hexa=" + fmt_bool(h), "all equal");
  }
}

inline void prop211_slice(Context& c) {
  for (int i = 0; i < c.n(); ++i) {
    const Complex p = sample::in_disc(c.rng(), 1.5);
    const Complex s = sample::in_disc(c.rng(), 2.5);
    const double mg = criteria::g2_slack(s, -p);
    if (std::abs(mg) <= c.band()) {
      c.exclude();
      continue;
    }
    try {
      const bool f = f_slice_xa_zero(p, s, c.tol());
      c.check(f == (mg > 0.0), "p=" + io::format_complex(p) + " s=" + io::format_complex(s), "F=" + fmt_bool(f),
              "G2=" + fmt_bool(mg > 0.0));
    } catch (const CriteriaDisagree& e) {
      c.check(false, "p=" + io::format_complex(p) + " s=" + io::format_complex(s), e.what(), "agreement");
    }
  }
}

inline void cor213_closure_projections(Context& c) {
  for (int i = 0; i < c.n(); ++i) {
    const PointF pt = sample::closure_point(c.rng());
    const FRelations rel = f_relations(pt);
    const bool g2 = g2_classify(rel.g2, c.tol()).in_closure();
    const bool tetra = tetra_classify(rel.tetra, c.tol()).in_closure();
    const bool penta = penta_classify(rel.penta, c.tol(), {false, {}}).in_closure();
    c.check(g2 && tetra && penta, fmt(pt),
            "g2=" + fmt_bool(g2) + " tetra=" + fmt_bool(tetra) + " penta=" + fmt_bool(penta), "all in closure");
  }
}

inline void prop215_hn(Context& c) {
  for (int i = 0; i < c.n(); ++i) {
    const Matrix2 A = random_matrix_with_norm_below(c.rng(), 2.0);
    const PointH pt = pi_hexa(A);
    const double norm = operator_norm(A);
    const HNVerdict v = hn_classify(pt, c.tol());
    const PointF image{pt.x1, pt.x2, pt.x3, pt.a + (pt.x1 * pt.x2 - pt.x3) / pt.a};
    const double mf = criteria::f_slack(image.x, image.a, image.p, image.s);
    if (std::abs(1.0 - norm) <= c.band() || std::abs(mf) <= c.band()) {
      c.exclude();
      continue;
    }
    c.check(v.in_open == (norm < 1.0) && v.in_closure == (norm <= 1.0), fmt(pt),
            "in_open=" + fmt_bool(v.in_open) + " in_closure=" + fmt_bool(v.in_closure), "norm=" + fmt(norm));
  }
  // images of the closed ball stay in the closure; unitaries land on bH
  for (int i = 0; i < c.n() / 10; ++i) {
    const Matrix2 A = i % 2 ? sample::norm_one_matrix(c.rng()) : random_contraction(c.rng());
    c.check(hn_classify(pi_hexa(A), c.tol()).in_closure, fmt(A), "in_closure=false", "true");
    const Matrix2 U = random_unitary(c.rng());
    c.check(shilov_h_test(pi_hexa(U), 1e-9), fmt(U), "bH=false", "true");
  }
  // H_N inside H
  const int k = std::max(1, std::min(100, c.n() / 100));
  for (int i = 0; i < k; ++i) {
    const Matrix2 A = random_matrix_with_norm_below(c.rng(), 0.95);
    const PointH pt = pi_hexa(A);
    const HexaVerdict h = hexa_classify(pt, c.tol());
    c.check(h.verdict.interior(), fmt(pt), "hexa region=" + std::string(to_string(h.verdict.region)),
            "interior (H_N point, norm " + fmt(operator_norm(A)) + ")");
  }
}

inline void thm32_boundary_transport(Context& c) {
  const int theta_steps = 16;
  const int sphere_points = std::max(1, c.n() / theta_steps);
  const TransportedBoundary grid = transported_shilov_grid(sphere_points, theta_steps);
  for (std::size_t i = 0; i < grid.images.size(); ++i) {
    const PointF& img = grid.images[i];
    c.check(shilov_f_test(img, 1e-9), fmt(img), "shilov_f_test=false", "true");
  }
  const int matches = std::max(1, c.n() / 10);
  for (int i = 0; i < matches; ++i) {
    const ShilovParamF q = sample::shilov_param(c.rng());
    const double d = transported_distance(shilov_f_param(q), grid);
    c.check(d < 1e-8, fmt(q), "distance=" + fmt(d), "< 1e-8");
  }
  // interior transport
  for (int i = 0; i < matches; ++i) {
    const PointCn z = sample::c4_point(c.rng());
    const MembershipVerdict lz = lie_ball_classify(z, c.tol());
    if (!lz.interior() || lz.margin <= c.band()) {
      c.exclude();
      continue;
    }
    const PointF img = biholo_f(lambda_map(z));
    c.check(f_classify(img, c.tol()).interior(), io::format_tuple(z), "F region=" + std::string(to_string(f_classify(img, c.tol()).region)), "interior");
  }
}

inline void thm33_shilov_equivalences(Context& c) {
  std::uniform_real_distribution<double> ueps(1e-3, 1e-1);
  for (int i = 0; i < c.n(); ++i) {
    const bool angle_form = i % 2 == 0;
    const PointF pt = angle_form ? shilov_f_param(sample::shilov_param(c.rng()))
                                 : shilov_f_from_ball(sample::ball_param(c.rng()));
    const MembershipVerdict v = f_classify(pt, c.tol());
    c.check(shilov_f_test(pt, c.tol()) && v.region == Region::ClosureBoundary, fmt(pt),
            "shilov=" + fmt_bool(shilov_f_test(pt, c.tol())) + " region=" + std::string(to_string(v.region)),
            "shilov=true region=ClosureBoundary");
    const double eps = ueps(c.rng());
    PointF off = pt;
    switch (c.rng()() % 4) {
      case 0: off.x += eps * sample::in_disc(c.rng(), 1.0); break;
      case 1: off.a += eps * sample::in_disc(c.rng(), 1.0); break;
      case 2: off.p += eps * sample::in_disc(c.rng(), 1.0); break;
      default: off.s += eps * sample::in_disc(c.rng(), 1.0); break;
    }
    const bool off_test = shilov_f_test(off, c.tol());
    if (distance(off, pt) <= c.band()) {
      c.exclude();
      continue;
    }
    c.check(!off_test, fmt(off), "shilov=true", "false");
    if (i % 100 == 0 && !off_test) {
      const double d = shilov_f_distance(off);
      c.check(d > c.tol(), fmt(off), "distance to parametrized set=" + fmt(d), "> tol");
    }
  }
}

inline void cor34_necessity(Context& c) {
  for (int i = 0; i < c.n(); ++i) {
    const PointF pt = shilov_f_param(sample::shilov_param(c.rng()));
    const bool be = tetra_shilov({pt.x, pt.a, pt.p}, 1e-9);
    const bool bg = g2_shilov({pt.s, -pt.p}, 1e-9);
    c.check(be && bg, fmt(pt), "bE=" + fmt_bool(be) + " bGamma=" + fmt_bool(bg), "both true");
  }
  const PointF counter{{0.0, 1.0}, 1.0, {0.0, 1.0}, {1.0, -1.0}};
  const bool be = tetra_shilov({counter.x, counter.a, counter.p}, c.tol());
  const bool bg = g2_shilov({counter.s, -counter.p}, c.tol());
  const bool sf = shilov_f_test(counter, c.tol());
  c.check(be && bg && !sf, fmt(counter), "bE=" + fmt_bool(be) + " bGamma=" + fmt_bool(bg) + " shilov=" + fmt_bool(sf),
          "bE=true bGamma=true shilov=false");
}

inline void cor35_double_cover(Context& c) {
  for (int i = 0; i < c.n(); ++i) {
    const ShilovParamF q = sample::shilov_param(c.rng());
    c.check(shilov_f_double_cover(q, c.tol()), fmt(q), "false", "true");
  }
}

inline std::vector<Structure> identity_presets(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
  return {structures::scalar(),           structures::diagonal(), structures::upper_triangular(),
          structures::lower_triangular(), structures::full(),     structures::e_theta(u(rng))};
}

inline void mu_sandwich(Context& c) {
  const double tol = std::max(c.tol(), 1e-7);
  for (int i = 0; i < c.n(); ++i) {
    const auto presets = identity_presets(c.rng());
    const Structure& E = presets[static_cast<std::size_t>(i) % presets.size()];
    const Matrix2 A = random_gaussian_matrix(c.rng());
    c.check(mu_sandwich_check(A, E, tol), E.name() + " " + fmt(A), "mu=" + fmt(mu_value(A, E).value),
            "in [" + fmt(spectral_radius(A)) + ", " + fmt(operator_norm(A)) + "]");
    const Complex k = sample::in_disc(c.rng(), 3.0);
    const double lhs = mu_value(k * A, E).value;
    const double rhs = std::abs(k) * mu_value(A, E).value;
    c.check(std::abs(lhs - rhs) <= tol * std::max(1.0, rhs), E.name() + " " + fmt(A) + " c=" + io::format_complex(k),
            "mu(cA)=" + fmt(lhs), "|c| mu(A)=" + fmt(rhs));
  }
  bool threw = false;
  try {
    mu_sandwich_check(Matrix2::e12(), structures::skew_diag());
  } catch (const PreconditionViolation&) {
    threw = true;
  }
  c.check(threw, "skewdiag", "no PreconditionViolation", "PreconditionViolation (identity not in E)");
}

struct EquivalenceLegs {
  bool mu_equals_norm;
  bool rigidity;
  bool membership;
};

/// The three conditions of the mu = norm equivalence for one structure.
inline EquivalenceLegs equivalence_legs(const Structure& E, int n, unsigned long long seed, double tol) {
  EquivalenceLegs legs{};
  legs.mu_equals_norm = mu_equals_norm_suite(E, n, seed, tol).failures.empty();

  const auto grid = sample::unit_vector_grid(4, 5);
  legs.rigidity = true;
  for (const Vec2& u : grid) {
    for (const Vec2& v : grid) {
      if (!rigidity_check(E, u, v)) {
        legs.rigidity = false;
        break;
      }
    }
    if (!legs.rigidity) break;
  }

  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  legs.membership = true;
  // images of 2 E12, 2 E21 and 2 (E12 + E21) / sqrt(2) come first, then random points
  std::vector<PointF> points{pi_F(2.0 * Matrix2::e12()), pi_F(2.0 * Matrix2::e21()),
                             pi_F(std::sqrt(2.0) * Matrix2{0.0, 1.0, 1.0, 0.0})};
  for (int i = 0; i < n; ++i) points.push_back(pi_F(random_matrix_with_norm_below(rng, 2.0)));
  for (const PointF& pt : points) {
    const double norm = operator_norm(f_reconstruct_matrix(pt));
    if (std::abs(norm - 1.0) <= 1e-4) continue;
    if (f_mu_membership(pt, E, 1e-9) != f_classify(pt).interior()) {
      legs.membership = false;
      break;
    }
  }
  return legs;
}

inline void thm41_equivalence(Context& c) {
  const double tol = std::max(c.tol(), 1e-6);
  const std::vector<std::pair<Structure, bool>> presets{
      {structures::scalar(), false},       {structures::diagonal(), false},         {structures::upper_triangular(), false},
      {structures::lower_triangular(), false}, {structures::full(), true},          {structures::e_theta(0.7), true},
      {structures::e_theta(2.1), true},    {structures::skew_diag(), true}};
  for (const auto& [E, expected] : presets) {
    const EquivalenceLegs legs = equivalence_legs(E, c.n(), c.rng()(), tol);
    const std::string observed = "mu=norm:" + fmt_bool(legs.mu_equals_norm) + " rigidity:" + fmt_bool(legs.rigidity) +
                                 " F=F_mu:" + fmt_bool(legs.membership);
    c.check(legs.mu_equals_norm == legs.rigidity && legs.rigidity == legs.membership, E.name(), observed,
            "three legs equal");
    c.check(legs.mu_equals_norm == expected, E.name(), observed, "mu=norm:" + fmt_bool(expected));
  }
}

inline void cor42_etheta(Context& c) {
  const double tol = std::max(c.tol(), 1e-6);
  std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
  std::vector<double> thetas{0.0, 0.7, 2.1, u(c.rng())};
  for (double theta : thetas) {
    const Structure E = structures::e_theta(theta);
    const MuNormReport rep = mu_equals_norm_suite(E, c.n(), c.rng()(), tol);
    for (const auto& f : rep.failures) {
      c.check(false, E.name() + " " + fmt(f.A), "mu=" + fmt(f.mu), "norm=" + fmt(f.norm));
    }
    for (const auto& f : rep.rigidity_failures) {
      c.check(false, E.name() + " u=" + io::format_tuple({f.u[0], f.u[1]}) + " v=" + io::format_tuple({f.v[0], f.v[1]}),
              "no norm-one element", "rigidity");
    }
    for (int i = 0; i < c.n(); ++i) {
      const PointF pt = sample::mixed_point(c.rng());
      const double norm = operator_norm(f_reconstruct_matrix(pt));
      if (std::abs(norm - 1.0) <= 1e-4) {
        c.exclude();
        continue;
      }
      const bool in_mu = f_mu_membership(pt, E, 1e-9);
      const bool in_f = f_classify(pt, c.tol()).interior();
      c.check(in_mu == in_f, E.name() + " " + fmt(pt), "F_mu=" + fmt_bool(in_mu), "F=" + fmt_bool(in_f));
    }
  }
}

inline double angle_gap(double a, double b) { return std::abs(std::remainder(a - b, 2.0 * kPi)); }

inline void final_classification(Context& c) {
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int i = 0; i < c.n(); ++i) {
    const double theta = u(c.rng());
    const Matrix2 G{0.0, 1.0, unit_phase(theta), 0.0};
    // an arbitrary basis of E_theta: mix in diagonal parts and rescale the generator
    const Complex k = sample::in_disc(c.rng(), 2.0) + 0.5;
    const Structure E({Matrix2::diag(1.0, sample::in_disc(c.rng(), 1.0)) + sample::in_disc(c.rng(), 1.0) * G,
                       Matrix2::diag(0.0, 1.0) + sample::in_disc(c.rng(), 1.0) * G,
                       k * G + Matrix2::diag(sample::in_disc(c.rng(), 1.0), sample::in_disc(c.rng(), 1.0))},
                      "e_theta_mixed");
    const SubspaceClass cls = classify_subspace(E, 1e-9);
    c.check(cls.is_etheta && angle_gap(cls.theta, theta) <= 1e-9, "theta=" + fmt(theta),
            "is_etheta=" + fmt_bool(cls.is_etheta) + " theta=" + fmt(cls.theta), "is_etheta=true");
  }
  std::vector<Structure> others{structures::upper_triangular(), structures::lower_triangular()};
  for (int i = 0; i < std::max(1, c.n() / 10); ++i) {
    const Complex alpha = sample::in_disc(c.rng(), 1.0);
    Complex beta = sample::in_disc(c.rng(), 1.0);
    if (std::abs(std::abs(beta) - std::abs(alpha)) < 0.05) beta *= 2.0;
    others.push_back(Structure({Matrix2::diag(1.0, 0.0), Matrix2::diag(0.0, 1.0), Matrix2{0.0, alpha, beta, 0.0}},
                               "offdiag(" + io::format_complex(alpha) + ", " + io::format_complex(beta) + ")"));
  }
  for (const Structure& E : others) {
    const SubspaceClass cls = classify_subspace(E, 1e-9);
    const auto witness = classification_witness(E);
    std::string obs = "is_etheta=" + fmt_bool(cls.is_etheta);
    bool confirmed = false;
    if (witness) {
      const double mu = mu_value(*witness, E).value;
      obs += " witness=" + fmt(*witness) + " mu=" + fmt(mu);
      confirmed = std::abs(mu - 1.0) > 1e-6;
    }
    c.check(!cls.is_etheta && confirmed, E.name(), obs, "NotETheta with a mu != norm witness");
  }
  const Structure Et = structures::e_theta(u(c.rng()));
  c.check(!classification_witness(Et), Et.name(), "witness found", "no witness");
}

}  // namespace suites

inline const std::vector<SuiteInfo>& registry() {
  static const std::vector<SuiteInfo> reg{
      {"lemma21_gram", 10000, suites::lemma21_gram},
      {"prop22_vs_oracle", 10000,
       [](Context& c) {
         suites::prop22_vs_oracle(c);
         suites::image_characterization(c, c.n());
       }},
      {"prop24_closure", 10000, suites::prop24_closure},
      {"swap_involution", 10000, suites::swap_involution},
      {"lemma25_scaling", 10000, suites::lemma25_scaling},
      {"thm29_projections", 10000, suites::thm29_projections},
      {"prop210_slice", 1000, suites::prop210_slice},
      {"prop211_slice", 10000, suites::prop211_slice},
      {"cor213_closure_projections", 10000, suites::cor213_closure_projections},
      {"prop215_hn", 10000, suites::prop215_hn},
      {"thm32_boundary_transport", 10000, suites::thm32_boundary_transport},
      {"thm33_shilov_equivalences", 10000, suites::thm33_shilov_equivalences},
      {"cor34_necessity", 10000, suites::cor34_necessity},
      {"cor35_double_cover", 10000, suites::cor35_double_cover},
      {"mu_sandwich", 100, suites::mu_sandwich},
      {"thm41_equivalence", 100, suites::thm41_equivalence},
      {"cor42_etheta", 100, suites::cor42_etheta},
      {"final_classification", 100, suites::final_classification},
  };
  return reg;
}

inline const SuiteInfo& find_suite(const std::string& name) {
  for (const auto& s : registry()) {
    if (s.name == name) return s;
  }
  throw UnknownSuite("unknown suite: " + name);
}

inline SuiteReport run_suite(const std::string& name, int n_samples, unsigned long long seed, double tol) {
  const SuiteInfo& info = find_suite(name);
  SuiteReport rep;
  rep.suite = name;
  rep.n_samples = n_samples > 0 ? n_samples : info.default_n;
  rep.seed = seed;
  rep.tol = tol;
  const auto t0 = std::chrono::steady_clock::now();
  Context ctx(rep);
  try {
    info.run(ctx);
  } catch (const Error& e) {
    rep.failures.push_back({"suite " + name, std::string("exception: ") + e.what(), "completion"});
  }
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::sort(rep.failures.begin(), rep.failures.end());
  return rep;
}

/// Re-derives the membership pattern of each counterexample for every r.
inline SuiteReport run_counterexamples(const std::vector<double>& r_grid, double tol = kDefaultTol) {
  SuiteReport rep;
  rep.suite = "counterexamples";
  rep.n_samples = static_cast<int>(r_grid.size());
  rep.tol = tol;
  const auto t0 = std::chrono::steady_clock::now();
  Context c(rep);
  for (double r : r_grid) {
    const std::string tag = "r=" + fmt(r);
    if (!(r > 0.0 && r < 1.0)) {
      c.check(false, tag, "r outside (0, 1)", "r in (0, 1)");
      continue;
    }
    const double r2 = r * r;
    // all three projections interior, point outside F
    const PointF p309{0.0, 1.0 - r2 / 2.0, r2, 0.0};
    const FRelations rel = f_relations(p309);
    const bool penta = penta_classify(rel.penta, tol).interior();
    const bool g2 = g2_classify(rel.g2, tol).interior();
    const MembershipVerdict vf = f_classify(p309, tol);
    const double q = criteria::f_quadratic(p309.x, p309.a, p309.p, p309.s);
    const double q_expected = (1.0 - r2) * (1.0 - r2) - (1.0 - r2 / 2.0) * (1.0 - r2 / 2.0);
    c.check(penta && g2 && vf.region == Region::Outside && std::abs(q - q_expected) <= 1e-12, tag + " " + fmt(p309),
            "penta=" + fmt_bool(penta) + " g2=" + fmt_bool(g2) + " F=" + std::string(to_string(vf.region)) +
                " Q=" + fmt(q),
            "penta=true g2=true F=Outside Q=" + fmt(q_expected));

    // family in P x G2 x E whose limit leaves the closure of F
    const PointF fam{0.0, 1.0 - r2 / 2.0, 0.0, r2};
    const FRelations rf = f_relations(fam);
    const bool fp = penta_classify(rf.penta, tol).interior();
    const bool fg = g2_classify(rf.g2, tol).interior();
    const bool fe = tetra_classify(rf.tetra, tol).interior();
    c.check(fp && fg && fe, tag + " " + fmt(fam),
            "penta=" + fmt_bool(fp) + " g2=" + fmt_bool(fg) + " tetra=" + fmt_bool(fe), "all interior");

    // (0, 0, r^2, 0) in F but (0, 0, 0, r^2) not in H_N
    const PointF in_f = pi_F(Matrix2{0.0, r, -r, 0.0});
    const bool f_in = f_classify(in_f, tol).interior();
    const HNVerdict hn = hn_classify({0.0, 0.0, 0.0, r2}, tol);
    c.check(f_in && !hn.in_open && in_f == PointF{0.0, 0.0, r2, 0.0}, tag + " " + fmt(in_f),
            "F=" + fmt_bool(f_in) + " H_N=" + fmt_bool(hn.in_open), "F=true H_N=false");
  }
  // limit point of the family
  const PointF lim{0.0, 0.5, 0.0, 1.0};
  const FRelations rl = f_relations(lim);
  const double q = criteria::f_quadratic(lim.x, lim.a, lim.p, lim.s);
  const MembershipVerdict vl = f_classify(lim, tol);
  const bool cg = g2_classify(rl.g2, tol).in_closure();
  const bool ce = tetra_classify(rl.tetra, tol).in_closure();
  const bool cp = penta_classify(rl.penta, tol).in_closure();
  c.check(std::abs(q + 0.25) <= 1e-12 && vl.region == Region::Outside && cg && ce && cp, fmt(lim),
          "Q=" + fmt(q) + " F=" + std::string(to_string(vl.region)) + " closures g2=" + fmt_bool(cg) +
              " tetra=" + fmt_bool(ce) + " penta=" + fmt_bool(cp),
          "Q=-0.25 F=Outside closures all true");
  // Shilov boundary necessity is not sufficient
  const PointF counter{{0.0, 1.0}, 1.0, {0.0, 1.0}, {1.0, -1.0}};
  const bool be = tetra_shilov({counter.x, counter.a, counter.p}, tol);
  const bool bg = g2_shilov({counter.s, -counter.p}, tol);
  const bool sf = shilov_f_test(counter, tol);
  c.check(be && bg && !sf, fmt(counter), "bE=" + fmt_bool(be) + " bGamma=" + fmt_bool(bg) + " shilov=" + fmt_bool(sf),
          "bE=true bGamma=true shilov=false");
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::sort(rep.failures.begin(), rep.failures.end());
  return rep;
}

// ---------------------------------------------------------------------------
// serialization

inline std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  return out + "\"";
}

/// One summary record followed by one record per failure.
inline std::string to_key_value(const SuiteReport& r) {
  std::string out = "suite=" + r.suite + " status=" + (r.passed() ? "pass" : "fail") +
                    " n=" + std::to_string(r.n_samples) + " seed=" + std::to_string(r.seed) + " tol=" + fmt(r.tol) +
                    " checked=" + std::to_string(r.checked) + " excluded=" + std::to_string(r.excluded) +
                    " failures=" + std::to_string(r.failures.size()) + " elapsed=" + fmt(r.elapsed_seconds) + "\n";
  for (const auto& f : r.failures) {
    out += "failure suite=" + r.suite + " seed=" + std::to_string(r.seed) + " input=" + quote(f.input) +
           " observed=" + quote(f.observed) + " expected=" + quote(f.expected) + "\n";
  }
  return out;
}

inline nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"input", f.input}, {"observed", f.observed}, {"expected", f.expected}});
  }
  return {{"suite", r.suite},       {"passed", r.passed()},   {"n_samples", r.n_samples},
          {"seed", r.seed},         {"tol", r.tol},           {"checked", r.checked},
          {"excluded", r.excluded}, {"failures", failures},   {"elapsed_seconds", r.elapsed_seconds}};
}

inline nlohmann::json aggregate(const std::vector<SuiteReport>& reports) {
  nlohmann::json out;
  out["passed"] = std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.passed(); });
  out["suites"] = nlohmann::json::array();
  for (const auto& r : reports) out["suites"].push_back(to_json(r));
  return out;
}

}  // namespace fdomain::verify
