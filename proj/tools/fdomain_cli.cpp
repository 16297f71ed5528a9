// fdomain: classify points, compute mu, run verification suites, write slice grids.
//
// Exit codes: 0 Interior / pass, 1 ClosureBoundary, 2 Outside, 3 verification
// failure, 64 parse error, 65 unknown structure, 66 unknown suite, 70 other errors.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fdomain/classical.hpp"
#include "fdomain/domain_f.hpp"
#include "fdomain/hexablock.hpp"
#include "fdomain/io.hpp"
#include "fdomain/lie_ball.hpp"
#include "fdomain/mu.hpp"
#include "fdomain/verify.hpp"

namespace {

using fdomain::Complex;
using fdomain::Region;
using nlohmann::json;

constexpr int kExitVerifyFail = 3;
constexpr int kExitParse = 64;
constexpr int kExitStructure = 65;
constexpr int kExitSuite = 66;
constexpr int kExitOther = 70;

struct Classification {
  Region region = Region::Outside;
  double margin = 0.0;
  bool indeterminate = false;
  json detail = json::object();
};

int region_code(Region r) {
  switch (r) {
    case Region::Interior: return 0;
    case Region::ClosureBoundary: return 1;
    case Region::Outside: return 2;
  }
  return 2;
}

Classification from_verdict(const fdomain::MembershipVerdict& v) {
  Classification c{v.region, v.margin, false, json::object()};
  if (v.shilov) c.detail["shilov"] = *v.shilov;
  return c;
}

Classification classify(const std::string& domain, const std::vector<Complex>& z, double tol) {
  if (z.size() != fdomain::io::domain_arity(domain)) {
    throw fdomain::ParseError("domain " + domain + " expects " + std::to_string(fdomain::io::domain_arity(domain)) +
                              " coordinates, got " + std::to_string(z.size()));
  }
  if (domain == "g2") return from_verdict(fdomain::g2_classify({z[0], z[1]}, tol));
  if (domain == "tetra") return from_verdict(fdomain::tetra_classify({z[0], z[1], z[2]}, tol));
  if (domain == "penta") return from_verdict(fdomain::penta_classify({z[0], z[1], z[2]}, tol));
  if (domain == "f") return from_verdict(fdomain::f_classify({z[0], z[1], z[2], z[3]}, tol));
  if (domain == "l4") return from_verdict(fdomain::lie_ball_classify(z, tol));
  if (domain == "h") {
    const fdomain::PointH pt{z[0], z[1], z[2], z[3]};
    const fdomain::HexaVerdict h = fdomain::hexa_classify(pt, tol);
    Classification c{h.verdict.region, h.verdict.margin, h.indeterminate, json::object()};
    if (h.sup) c.detail["psi_sup"] = *h.sup;
    c.detail["indeterminate"] = h.indeterminate;
    c.detail["shilov"] = fdomain::shilov_h_test(pt, tol);
    return c;
  }
  // hn
  const fdomain::PointH pt{z[0], z[1], z[2], z[3]};
  const fdomain::HNVerdict v = fdomain::hn_classify(pt, tol);
  Classification c;
  c.region = v.in_open ? Region::Interior : v.in_closure ? Region::ClosureBoundary : Region::Outside;
  c.margin = pt.a != Complex{0.0} ? 1.0 - fdomain::operator_norm(fdomain::hn_reconstruct_matrix(pt))
                                  : std::numeric_limits<double>::quiet_NaN();
  c.detail["in_open"] = v.in_open;
  c.detail["in_closure"] = v.in_closure;
  c.detail["in_interior_of_HN"] = v.in_interior_of_HN;
  c.detail["shilov"] = fdomain::shilov_h_test(pt, tol);
  return c;
}

double default_tol() {
  if (const char* env = std::getenv("FDOMAIN_TOL")) {
    try {
      const double t = std::stod(env);
      if (t >= 0.0 && std::isfinite(t)) return t;
    } catch (const std::exception&) {
    }
    throw fdomain::ParseError(std::string("FDOMAIN_TOL is not a non-negative number: ") + env);
  }
  return fdomain::kDefaultTol;
}

std::vector<std::string> coordinate_names(const std::string& domain) {
  if (domain == "g2") return {"s", "p"};
  if (domain == "tetra") return {"x1", "x2", "x3"};
  if (domain == "penta") return {"a", "s", "p"};
  if (domain == "f") return {"x", "a", "p", "s"};
  if (domain == "h" || domain == "hn") return {"a", "x1", "x2", "x3"};
  if (domain == "l4") return {"z1", "z2", "z3", "z4"};
  throw fdomain::ParseError("unknown domain: " + domain);
}

std::string json_text(const json& j) { return j.dump(2) + "\n"; }

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw fdomain::ParseError("cannot open output file: " + path);
  f << text;
}

// ---------------------------------------------------------------------------

struct CheckArgs {
  std::string domain;
  std::string point;
  std::optional<double> tol;
};

int cmd_check(const CheckArgs& a) {
  const double tol = a.tol.value_or(default_tol());
  std::string domain = a.domain;
  std::string point = a.point;
  // a lone positional argument may be a point document
  if (point.empty() && !fdomain::io::trim(domain).empty() && fdomain::io::trim(domain).front() == '{') {
    point = domain;
    domain.clear();
  }
  if (point.empty()) throw fdomain::ParseError("a point is required");
  std::vector<Complex> coords;
  const std::string trimmed = fdomain::io::trim(point);
  if (!trimmed.empty() && trimmed.front() == '{') {
    const auto doc = fdomain::io::parse_point_document(trimmed);
    if (!domain.empty() && domain != doc.domain) {
      throw fdomain::ParseError("--domain " + domain + " conflicts with document domain " + doc.domain);
    }
    domain = doc.domain;
    coords = doc.coords;
  } else {
    if (domain.empty()) throw fdomain::ParseError("a domain is required for tuple input");
    coords = fdomain::io::parse_tuple(trimmed);
  }
  const Classification c = classify(domain, coords, tol);
  json out{{"domain", domain},
           {"point", fdomain::io::format_tuple(coords)},
           {"coords", fdomain::io::to_json(coords)},
           {"region", std::string(fdomain::to_string(c.region))},
           {"margin", c.margin},
           {"tol", tol}};
  for (auto it = c.detail.begin(); it != c.detail.end(); ++it) out[it.key()] = it.value();
  std::cout << json_text(out);
  return region_code(c.region);
}

struct MuArgs {
  std::string structure;
  std::string matrix;
  std::optional<double> tol;
};

int cmd_mu(const MuArgs& a) {
  const fdomain::Structure E = fdomain::structures::from_name(a.structure);
  const fdomain::Matrix2 A = fdomain::io::parse_matrix(a.matrix);
  const fdomain::MuResult r = a.tol ? fdomain::mu_value(A, E, *a.tol) : fdomain::mu_value(A, E);
  json out{{"structure", a.structure},
           {"matrix", fdomain::io::format_matrix(A)},
           {"value", r.value},
           {"status", std::string(fdomain::to_string(r.status))},
           {"spectral_radius", fdomain::spectral_radius(A)},
           {"norm", fdomain::operator_norm(A)}};
  if (r.minimizer) {
    out["minimizer"] = fdomain::io::to_json(*r.minimizer);
    out["minimizer_text"] = fdomain::io::format_matrix(*r.minimizer);
  } else {
    out["minimizer"] = nullptr;
  }
  std::cout << json_text(out);
  return 0;
}

struct VerifyArgs {
  std::string suite;
  int n = 0;
  unsigned long long seed = 7;
  std::optional<double> tol;
  std::vector<double> r_grid{0.1, 0.25, 0.5, 0.75, 0.9};
  std::string out;
};

int cmd_verify(const VerifyArgs& a) {
  const double tol = a.tol.value_or(default_tol());
  std::vector<fdomain::verify::SuiteReport> reports;
  if (a.suite == "all") {
    for (const auto& info : fdomain::verify::registry()) {
      reports.push_back(fdomain::verify::run_suite(info.name, a.n, a.seed, tol));
      std::cout << fdomain::verify::to_key_value(reports.back()) << std::flush;
    }
    reports.push_back(fdomain::verify::run_counterexamples(a.r_grid, tol));
    std::cout << fdomain::verify::to_key_value(reports.back());
  } else if (a.suite == "counterexamples") {
    reports.push_back(fdomain::verify::run_counterexamples(a.r_grid, tol));
    std::cout << fdomain::verify::to_key_value(reports.back());
  } else {
    reports.push_back(fdomain::verify::run_suite(a.suite, a.n, a.seed, tol));
    std::cout << fdomain::verify::to_key_value(reports.back());
  }
  const json agg = fdomain::verify::aggregate(reports);
  if (!a.out.empty()) write_output(a.out, json_text(agg));
  return agg.at("passed").get<bool>() ? 0 : kExitVerifyFail;
}

struct SliceArgs {
  std::string domain;
  std::string fixed;
  std::string axes;
  std::string range = "-1.5,1.5";
  int grid = 100;
  std::optional<double> tol;
  std::string out;
};

struct Axis {
  std::size_t index;
  bool imaginary;
  std::string label;
};

Axis parse_axis(const std::string& text, const std::vector<std::string>& names) {
  std::string t = fdomain::io::trim(text);
  bool imag = false;
  std::string lower;
  for (char ch : t) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (lower.rfind("re(", 0) == 0 || lower.rfind("im(", 0) == 0) {
    if (lower.back() != ')') throw fdomain::ParseError("bad axis: " + text);
    imag = lower[0] == 'i';
    t = t.substr(3, t.size() - 4);
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == t) return {i, imag, std::string(imag ? "im(" : "re(") + t + ")"};
  }
  throw fdomain::ParseError("unknown coordinate in axis: " + text);
}

std::pair<double, double> parse_range(const std::string& text) {
  const auto parts = fdomain::io::split_list(text, '[', ']');
  if (parts.size() != 2) throw fdomain::ParseError("range must be lo,hi: " + text);
  const double lo = fdomain::io::parse_real(fdomain::io::trim(parts[0]), text);
  const double hi = fdomain::io::parse_real(fdomain::io::trim(parts[1]), text);
  if (!(lo < hi)) throw fdomain::ParseError("range must satisfy lo < hi: " + text);
  return {lo, hi};
}

int cmd_slice(const SliceArgs& a) {
  const double tol = a.tol.value_or(default_tol());
  const auto names = coordinate_names(a.domain);
  std::vector<Complex> base(names.size(), Complex{0.0});
  if (!fdomain::io::trim(a.fixed).empty()) {
    for (const auto& item : fdomain::io::split_list(a.fixed, '(', ')')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw fdomain::ParseError("fixed coordinate needs name=value: " + item);
      const std::string name = fdomain::io::trim(item.substr(0, eq));
      const auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) throw fdomain::ParseError("unknown coordinate: " + name);
      base[static_cast<std::size_t>(it - names.begin())] = fdomain::io::parse_complex(item.substr(eq + 1));
    }
  }
  const auto axis_parts = fdomain::io::split_list(a.axes, '[', ']');
  if (axis_parts.size() != 2) throw fdomain::ParseError("slice needs exactly two axes, got " + std::to_string(axis_parts.size()));
  const Axis ax1 = parse_axis(axis_parts[0], names);
  const Axis ax2 = parse_axis(axis_parts[1], names);
  if (ax1.index == ax2.index && ax1.imaginary == ax2.imaginary) throw fdomain::ParseError("the two axes coincide");

  std::pair<double, double> r1, r2;
  const auto semi = a.range.find(';');
  if (semi == std::string::npos) {
    r1 = r2 = parse_range(a.range);
  } else {
    r1 = parse_range(a.range.substr(0, semi));
    r2 = parse_range(a.range.substr(semi + 1));
  }
  if (a.grid < 2) throw fdomain::ParseError("grid must be at least 2");

  std::ostringstream os;
  os << ax1.label << ',' << ax2.label << ",verdict,margin\n";
  for (int i = 0; i < a.grid; ++i) {
    const double v1 = r1.first + (r1.second - r1.first) * i / (a.grid - 1);
    for (int j = 0; j < a.grid; ++j) {
      const double v2 = r2.first + (r2.second - r2.first) * j / (a.grid - 1);
      std::vector<Complex> z = base;
      auto set = [&](const Axis& ax, double v) {
        Complex& c = z[ax.index];
        c = ax.imaginary ? Complex{c.real(), v} : Complex{v, c.imag()};
      };
      set(ax1, v1);
      set(ax2, v2);
      int code = 2;
      double margin = 0.0;
      try {
        const Classification c = classify(a.domain, z, tol);
        code = c.indeterminate ? 9 : region_code(c.region);
        margin = c.margin;
      } catch (const fdomain::OptimizerNoConverge&) {
        code = 9;
        margin = std::numeric_limits<double>::quiet_NaN();
      }
      os << fdomain::io::format_real(v1) << ',' << fdomain::io::format_real(v2) << ',' << code << ','
         << fdomain::io::format_real(margin) << '\n';
    }
  }
  write_output(a.out, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Membership, mu and verification tools for the domain F and its relatives"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "classify a point");
  c->add_option("domain,--domain", check.domain, "g2, tetra, penta, f, h, hn or l4");
  c->add_option("point,--point", check.point, "tuple like \"(0, 0.5, 0, 1)\" or a JSON point document");
  c->add_option("--tol", check.tol, "classification tolerance (default FDOMAIN_TOL or 1e-9)");

  MuArgs mu;
  auto* m = app.add_subcommand("mu", "structured singular value");
  m->add_option("structure,--structure", mu.structure, "scalar, diag, upper, lower, full, skewdiag, e_theta:<angle>")
      ->required();
  m->add_option("matrix,--matrix", mu.matrix, "matrix like \"[[0,1],[0,0]]\"")->required();
  m->add_option("--tol", mu.tol, "bound on |det(I - AX)| at the minimizer");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "run a verification suite, 'all' or 'counterexamples'");
  v->add_option("suite,--suite", ver.suite)->required();
  v->add_option("--n", ver.n, "sample count (default per suite)");
  v->add_option("--seed", ver.seed);
  v->add_option("--tol", ver.tol);
  v->add_option("--r", ver.r_grid, "r values for the counterexamples")->delimiter(',');
  v->add_option("--out", ver.out, "write the JSON aggregate here");

  SliceArgs sl;
  auto* s = app.add_subcommand("slice", "classify a 2-D grid of points");
  s->add_option("domain,--domain", sl.domain)->required();
  s->add_option("--fixed", sl.fixed, "fixed coordinates, e.g. \"x=0,a=0\" (others are 0)");
  s->add_option("--axes", sl.axes, "two free axes, e.g. \"re(p),re(s)\"")->required();
  s->add_option("--range", sl.range, "lo,hi or lo1,hi1;lo2,hi2");
  s->add_option("--grid", sl.grid, "points per axis");
  s->add_option("--tol", sl.tol);
  s->add_option("--out", sl.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (c->parsed()) return cmd_check(check);
    if (m->parsed()) return cmd_mu(mu);
    if (v->parsed()) return cmd_verify(ver);
    if (s->parsed()) return cmd_slice(sl);
  } catch (const fdomain::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const fdomain::UnknownStructure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitStructure;
  } catch (const fdomain::UnknownSuite& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSuite;
  } catch (const fdomain::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOther;
  }
  return kExitParse;
}
