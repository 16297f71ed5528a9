#pragma once

// Text and JSON forms of complex scalars, points and matrices.

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "fdomain/errors.hpp"
#include "fdomain/matrix2.hpp"
#include "fdomain/scalar.hpp"

namespace fdomain::io {

inline std::string trim(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

inline double parse_real(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw ParseError("not a number: '" + std::string(whole) + "'");
  }
  return v;
}

/// Accepts "1.5", "-2i", "i", "0.5-0.25i", "1e-3+2E-2i" (a trailing j works like i).
inline Complex parse_complex(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) throw ParseError("empty complex literal");
  if (s.back() != 'i' && s.back() != 'j') return {parse_real(s, text), 0.0};
  const std::string_view body(s.data(), s.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string_view re_text = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view im_text = split == std::string_view::npos ? body : body.substr(split);
  double im = 0.0;
  if (im_text.empty() || im_text == "+") {
    im = 1.0;
  } else if (im_text == "-") {
    im = -1.0;
  } else {
    im = parse_real(im_text, text);
  }
  return {re_text.empty() ? 0.0 : parse_real(re_text, text), im};
}

/// Splits "(a, b, c)" (parentheses optional) at top-level commas.
inline std::vector<std::string> split_list(std::string_view text, char open, char close) {
  std::string s = trim(text);
  if (!s.empty() && s.front() == open) {
    if (s.back() != close) throw ParseError("unbalanced brackets in '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced brackets in '" + std::string(text) + "'");
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (depth != 0) throw ParseError("unbalanced brackets in '" + std::string(text) + "'");
  if (!cur.empty() || !parts.empty()) parts.push_back(cur);
  return parts;
}

inline std::vector<Complex> parse_tuple(std::string_view text) {
  std::vector<Complex> out;
  for (const auto& p : split_list(text, '(', ')')) out.push_back(parse_complex(p));
  return out;
}

/// "[[a11, a12], [a21, a22]]".
inline Matrix2 parse_matrix(std::string_view text) {
  const auto rows = split_list(text, '[', ']');
  if (rows.size() != 2) throw ParseError("matrix must have two rows: '" + std::string(text) + "'");
  std::vector<Complex> e;
  for (const auto& r : rows) {
    const auto cols = split_list(r, '[', ']');
    if (cols.size() != 2) throw ParseError("matrix rows must have two entries: '" + std::string(text) + "'");
    for (const auto& c : cols) e.push_back(parse_complex(c));
  }
  return {e[0], e[1], e[2], e[3]};
}

inline Complex complex_from_json(const nlohmann::json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_string()) return parse_complex(j.get<std::string>());
  if (j.is_object() && j.contains("re")) return {j.at("re").get<double>(), j.value("im", 0.0)};
  if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
  throw ParseError("bad complex value: " + j.dump());
}

struct PointDocument {
  std::string domain;
  std::vector<Complex> coords;
};

inline std::size_t domain_arity(const std::string& domain) {
  if (domain == "g2") return 2;
  if (domain == "tetra" || domain == "penta") return 3;
  if (domain == "f" || domain == "h" || domain == "hn" || domain == "l4") return 4;
  throw ParseError("unknown domain: " + domain);
}

/// {"domain": "f", "coords": [{"re": 0, "im": 0}, ...]}.
inline PointDocument parse_point_document(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("domain") || !j.contains("coords") || !j.at("coords").is_array()) {
    throw ParseError("point document needs 'domain' and 'coords'");
  }
  PointDocument doc;
  try {
    doc.domain = j.at("domain").get<std::string>();
    for (const auto& c : j.at("coords")) doc.coords.push_back(complex_from_json(c));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed point document: ") + e.what());
  }
  if (doc.coords.size() != domain_arity(doc.domain)) {
    throw ParseError("domain " + doc.domain + " expects " + std::to_string(domain_arity(doc.domain)) + " coordinates");
  }
  return doc;
}

// ---------------------------------------------------------------------------
// output

inline std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string format_complex(Complex z) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

inline std::string format_tuple(const std::vector<Complex>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_complex(v[i]);
  }
  return out + ")";
}

inline std::string format_matrix(const Matrix2& A) {
  return "[[" + format_complex(A.a11) + ", " + format_complex(A.a12) + "], [" + format_complex(A.a21) + ", " +
         format_complex(A.a22) + "]]";
}

inline nlohmann::json to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

inline nlohmann::json to_json(const std::vector<Complex>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const Complex& z : v) out.push_back(to_json(z));
  return out;
}

inline nlohmann::json to_json(const Matrix2& A) {
  return nlohmann::json::array({nlohmann::json::array({to_json(A.a11), to_json(A.a12)}),
                                nlohmann::json::array({to_json(A.a21), to_json(A.a22)})});
}

}  // namespace fdomain::io
