#pragma once

#include <string>
#include <vector>

namespace holopow {

struct VerifyOutcome {
  std::string name;
  bool pass = false;
  double seconds = 0;
  std::string detail;  // failure description, empty on pass
};

/// Runs the built-in reference-fixture checks (printed operators, exponent
/// tables, bound values, cross-validated special-function values). A
/// non-empty filter selects checks whose name contains it.
std::vector<VerifyOutcome> run_reference_checks(const std::string& filter = "");

}  // namespace holopow
