#pragma once

#include <cstdlib>

namespace holopow {

/// Upper limit for the power n accepted by the operator construction.
/// Coefficient sizes grow super-polynomially in n, so desk-scale use is
/// capped; the HOLOPOW_MAX_N environment variable overrides the default.
inline int power_n_cap() {
  static const int cap = [] {
    if (const char* s = std::getenv("HOLOPOW_MAX_N")) {
      int v = std::atoi(s);
      if (v >= 1) return v;
    }
    return 16;
  }();
  return cap;
}

}  // namespace holopow
