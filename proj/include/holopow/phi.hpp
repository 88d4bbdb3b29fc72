#pragma once

#include <complex>
#include <vector>

#include "holopow/specfun.hpp"

namespace holopow {

/// Characteristic function of a cubed standard normal,
/// phi(t) = sqrt(2/pi) int_0^inf exp(-x^2/2) cos(t x^3) dx, by adaptive
/// quadrature. Real-valued; |t| above the oscillation limit is rejected.
double phi_quadrature(double t, double abs_tol = 1e-12, double oscillation_limit = 100.0);

/// (phi, phi', phi'') by differentiating under the integral sign.
struct PhiDerivs {
  double phi, dphi, d2phi;
};
PhiDerivs phi_quadrature_derivs(double t, double abs_tol = 1e-12);

/// Finite sum phi_n(t) = sum_j c[j] t^(-(min_j + j)/3): the large-t expansion
/// of a power of phi in the variable u = t^(-1/3). Supports exact term-wise
/// differentiation and powers; valid for t > 0.
class PhiSeries {
public:
  PhiSeries() = default;
  PhiSeries(int min_j, std::vector<double> coeffs) : min_j_(min_j), c_(std::move(coeffs)) {}

  /// Expansion of phi itself, with k_terms terms of each of its two branches
  /// (exponents -(6k+1)/3 and -(6k+5)/3).
  static PhiSeries phi(int k_terms);

  /// Series of the n-th power, truncated to exponents -j/3 with j <= j_max.
  PhiSeries pow(int n, int j_max) const;

  PhiSeries derivative() const;

  double eval(double t) const;

  int min_j() const { return min_j_; }
  const std::vector<double>& coeffs() const { return c_; }

private:
  int min_j_ = 0;
  std::vector<double> c_;  // coefficient of t^(-(min_j_+idx)/3)
};

/// Expansion value of phi(t) with K terms per branch; phi is even, so the
/// sign of t only enters through |t|. t = 0 is rejected.
double phi_asymptotic(double t, int k_terms = 40);

/// phi via the Airy relation
/// phi(t) = sqrt(2 pi) 3^(-1/3) t^(-1/3) e^(t^-2/108) Ai(t^(-4/3)/(4*3^(4/3))),
/// valid cross-check for t around 1 and above where the Airy argument is small.
double airy_phi(double t);

/// Oscillatory tail integrals J_l = int_{T'}^inf e^{it} t^(-l/3) dt for
/// l = 1..l_max; J_1, J_2 from closed-form full-line values minus finite
/// quadrature, J_3 from trigonometric integrals, the rest by the recursion
/// J_{l+3} = (3/l)(e^{iT'} T'^(-l/3) + i J_l). Entry [0] is unused.
std::vector<std::complex<double>> j_values(double t_prime, int l_max);

/// Path-switching evaluator: quadrature below t_switch, expansion above.
struct PhiEvaluator {
  double t_switch = 8.0;
  int k_terms = 40;
  double abs_tol = 1e-12;

  double operator()(double t) const;
};

}  // namespace holopow
