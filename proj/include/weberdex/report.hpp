#pragma once

#include <string>

#include "weberdex/specfun.hpp"

namespace weberdex {

/// Two sides of a numerical identity and the verdict against the tolerances.
struct IdentityReport {
  std::string family;  // identity label shared by all parameter points
  std::string name;
  ComplexValue lhs;
  ComplexValue rhs;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double abs_tol = 0.0;
  double rel_tol = 0.0;
  bool passed = false;
  std::string note;

  /// Fills the errors and the verdict from lhs/rhs.
  void finish();
};

IdentityReport make_report(std::string name, ComplexValue lhs, ComplexValue rhs, double rel_tol,
                           double abs_tol = 0.0);

}  // namespace weberdex
