#pragma once

#include <optional>
#include <string_view>

#include "fdomain/scalar.hpp"

namespace fdomain {

enum class Region { Interior, ClosureBoundary, Outside };

inline std::string_view to_string(Region r) {
  switch (r) {
    case Region::Interior: return "Interior";
    case Region::ClosureBoundary: return "ClosureBoundary";
    case Region::Outside: return "Outside";
  }
  return "?";
}

/// Three-state membership with the signed slack of the binding inequality.
/// Interior implies margin > tol, Outside implies margin < -tol.
struct MembershipVerdict {
  Region region = Region::Outside;
  std::optional<bool> shilov;
  double margin = 0.0;
  double tol = kDefaultTol;

  bool interior() const { return region == Region::Interior; }
  bool in_closure() const { return region != Region::Outside; }
};

inline Region region_from_margin(double margin, double tol) {
  if (margin > tol) return Region::Interior;
  if (margin < -tol) return Region::Outside;
  return Region::ClosureBoundary;
}

inline MembershipVerdict verdict_from_margin(double margin, double tol) {
  return {region_from_margin(margin, tol), std::nullopt, margin, tol};
}

/// Whether two margins of equivalent criteria contradict each other outside the band.
inline bool margins_conflict(double m1, double m2, double tol) {
  return (m1 > tol && m2 < -tol) || (m1 < -tol && m2 > tol);
}

}  // namespace fdomain
