#pragma once

#include <complex>

#include "holopow/rational.hpp"

namespace holopow {

/// Multifactorial n!m = n (n-m) (n-2m) ... over the positive factors;
/// defined as 1 for n <= 0.
Rational multifactorial(long n, long m);

/// Airy Ai by its Maclaurin series; accurate for |x| up to a few units,
/// which covers the t >= 1 range of the characteristic-function relation.
double airy_ai(double x);

/// Sine and cosine integrals Si(x) = int_0^x sin t / t dt and
/// Ci(x) = gamma + log x + int_0^x (cos t - 1)/t dt, x > 0. Maclaurin series
/// up to x = 20, standard asymptotic forms beyond.
double sine_integral(double x);
double cosine_integral(double x);

}  // namespace holopow
