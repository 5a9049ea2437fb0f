#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace corrpriv {

inline constexpr double kBoundTol = 1e-9;

/// One verified inequality or identity: slack = rhs - lhs, oriented so that
/// slack >= 0 means the bound holds.
struct BoundReport {
  std::string bound_name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool holds = false;
  std::string context;

  static BoundReport make(std::string name, double lhs, double rhs,
                          std::string context = "", double tol = kBoundTol) {
    BoundReport r;
    r.bound_name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.holds = r.slack >= -tol;
    r.context = std::move(context);
    return r;
  }

  /// Two-sided variant for identities: holds iff |rhs - lhs| <= tol.
  static BoundReport make_identity(std::string name, double lhs, double rhs,
                                   std::string context = "",
                                   double tol = kBoundTol) {
    BoundReport r = make(std::move(name), lhs, rhs, std::move(context), tol);
    r.holds = std::abs(r.slack) <= tol;
    return r;
  }
};

std::string bound_report_csv_header();
std::string to_csv_row(const BoundReport& r);
std::string to_json(const std::vector<BoundReport>& reports);

}  // namespace corrpriv
