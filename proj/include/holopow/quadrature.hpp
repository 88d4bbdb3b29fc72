#pragma once

#include <complex>
#include <functional>

namespace holopow {

struct QuadratureResult {
  double value = 0;
  double error = 0;
  std::size_t evaluations = 0;
};

struct ComplexQuadratureResult {
  std::complex<double> value;
  double error = 0;
  std::size_t evaluations = 0;
};

/// Globally adaptive Gauss-Kronrod 7/15 integration on [a, b] to absolute
/// tolerance abs_tol. Throws ToleranceError when the segment budget is
/// exhausted before the tolerance is met.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, std::size_t max_segments = 200000);

ComplexQuadratureResult integrate_complex(const std::function<std::complex<double>(double)>& f,
                                          double a, double b, double abs_tol,
                                          std::size_t max_segments = 200000);

}  // namespace holopow
