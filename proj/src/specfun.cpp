#include "holopow/specfun.hpp"

#include <cmath>

#include "holopow/errors.hpp"

namespace holopow {

Rational multifactorial(long n, long m) {
  if (m < 1) throw DomainError("multifactorial step must be >= 1");
  if (n <= 0) return Rational(1);
  Int acc = 1;
  for (long v = n; v > 0; v -= m) acc *= Int(v);
  return Rational(acc);
}

double airy_ai(double x) {
  // Ai(x) = Ai(0) f(x) + Ai'(0) g(x) with
  // f = sum 3^k (1/3)_k x^(3k)/(3k)!, g = sum 3^k (2/3)_k x^(3k+1)/(3k+1)!
  static const double ai0 = std::pow(3.0, -2.0 / 3.0) / std::tgamma(2.0 / 3.0);
  static const double aip0 = -std::pow(3.0, -1.0 / 3.0) / std::tgamma(1.0 / 3.0);
  double f = 1.0, g = x;
  double tf = 1.0, tg = x;
  const double x3 = x * x * x;
  for (int k = 1; k <= 60; ++k) {
    // (1/3)_k / (1/3)_{k-1} = (3k-2)/3; extra factor 3^1; (3k)!/(3k-3)!
    tf *= x3 * (3.0 * k - 2.0) / ((3.0 * k) * (3.0 * k - 1.0) * (3.0 * k - 2.0));
    tg *= x3 * (3.0 * k - 1.0) / ((3.0 * k + 1.0) * (3.0 * k) * (3.0 * k - 1.0));
    f += tf;
    g += tg;
    if (std::abs(tf) + std::abs(tg) < 1e-18 * (std::abs(f) + std::abs(g))) break;
  }
  return ai0 * f + aip0 * g;
}

namespace {

// Auxiliary asymptotic sums: Si(x) ~ pi/2 - f cos - g sin, Ci(x) ~ f sin - g cos,
// f = sum (-1)^k (2k)!/x^(2k+1), g = sum (-1)^k (2k+1)!/x^(2k+2), truncated at
// the smallest term.
void trig_integral_asymptotic(double x, double& f, double& g) {
  f = 0;
  g = 0;
  double tf = 1.0 / x, tg = 1.0 / (x * x);
  double prev_f = HUGE_VAL, prev_g = HUGE_VAL;
  int sign = 1;
  for (int k = 0; k < 40; ++k) {
    if (std::abs(tf) > prev_f || std::abs(tg) > prev_g) break;
    f += sign * tf;
    g += sign * tg;
    prev_f = std::abs(tf);
    prev_g = std::abs(tg);
    tf *= (2.0 * k + 1.0) * (2.0 * k + 2.0) / (x * x);
    tg *= (2.0 * k + 2.0) * (2.0 * k + 3.0) / (x * x);
    sign = -sign;
  }
}

constexpr double kEulerGamma = 0.5772156649015328606;

}  // namespace

double sine_integral(double x) {
  if (x < 0) return -sine_integral(-x);
  if (x == 0) return 0;
  if (x <= 20) {
    // sum (-1)^k x^(2k+1) / ((2k+1) (2k+1)!)
    double term = x, sum = x;
    for (int k = 1; k <= 80; ++k) {
      term *= -x * x / ((2.0 * k) * (2.0 * k + 1.0));
      double add = term / (2.0 * k + 1.0);
      sum += add;
      if (std::abs(add) < 1e-18 * std::abs(sum) + 1e-22) break;
    }
    return sum;
  }
  double f, g;
  trig_integral_asymptotic(x, f, g);
  return M_PI / 2 - f * std::cos(x) - g * std::sin(x);
}

double cosine_integral(double x) {
  if (x <= 0) throw DomainError("Ci needs x > 0");
  if (x <= 20) {
    // gamma + log x + sum (-1)^k x^(2k) / (2k (2k)!)
    double term = 1.0, sum = 0.0;
    for (int k = 1; k <= 80; ++k) {
      term *= -x * x / ((2.0 * k - 1.0) * (2.0 * k));
      double add = term / (2.0 * k);
      sum += add;
      if (std::abs(add) < 1e-18 * (std::abs(sum) + 1) + 1e-22) break;
    }
    return kEulerGamma + std::log(x) + sum;
  }
  double f, g;
  trig_integral_asymptotic(x, f, g);
  return f * std::sin(x) - g * std::cos(x);
}

}  // namespace holopow
