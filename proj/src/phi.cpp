#include "holopow/phi.hpp"

#include <cmath>

#include "holopow/errors.hpp"
#include "holopow/quadrature.hpp"

namespace holopow {

namespace {

constexpr double kGaussCut = 8.5;  // exp(-x^2/2) < 3e-16 beyond

double damped_cos_integral(double t, int xpow, double abs_tol) {
  auto f = [t, xpow](double x) {
    return std::pow(x, xpow) * std::exp(-0.5 * x * x) * std::cos(t * x * x * x);
  };
  return integrate(f, 0.0, kGaussCut, abs_tol).value;
}

double damped_sin_integral(double t, int xpow, double abs_tol) {
  auto f = [t, xpow](double x) {
    return std::pow(x, xpow) * std::exp(-0.5 * x * x) * std::sin(t * x * x * x);
  };
  return integrate(f, 0.0, kGaussCut, abs_tol).value;
}

}  // namespace

double phi_quadrature(double t, double abs_tol, double oscillation_limit) {
  if (std::abs(t) > oscillation_limit)
    throw DomainError("phi_quadrature: |t| beyond the oscillation limit");
  return std::sqrt(2.0 / M_PI) * damped_cos_integral(std::abs(t), 0, abs_tol);
}

PhiDerivs phi_quadrature_derivs(double t, double abs_tol) {
  const double s = std::sqrt(2.0 / M_PI);
  double sign = t < 0 ? -1.0 : 1.0;
  double at = std::abs(t);
  PhiDerivs d;
  d.phi = s * damped_cos_integral(at, 0, abs_tol);
  d.dphi = sign * -s * damped_sin_integral(at, 3, abs_tol);
  d.d2phi = -s * damped_cos_integral(at, 6, abs_tol);
  return d;
}

PhiSeries PhiSeries::phi(int k_terms) {
  // phi(t) = sqrt(2pi)/(3 Gamma(2/3)) t^(-1/3) sum_k a_k (3t)^(-2k)
  //        - sqrt(2pi)/(9 Gamma(1/3)) t^(-5/3) sum_k b_k (3t)^(-2k)
  // a_k = (6k-5)!6 / ((6k)!6 (6k-4)!6), b_k = (6k-1)!6 / ((6k)!6 (6k+4)!6)
  const double ca = std::sqrt(2.0 * M_PI) / (3.0 * std::tgamma(2.0 / 3.0));
  const double cb = -std::sqrt(2.0 * M_PI) / (9.0 * std::tgamma(1.0 / 3.0));
  std::vector<double> c(static_cast<std::size_t>(6 * (k_terms - 1) + 5) - 1 + 1, 0.0);
  // exponent -(j)/3 stored at index j - 1, min_j = 1
  for (int k = 0; k < k_terms; ++k) {
    Rational ak = multifactorial(6 * k - 5, 6) /
                  (multifactorial(6 * k, 6) * multifactorial(6 * k - 4, 6));
    Rational bk = multifactorial(6 * k - 1, 6) /
                  (multifactorial(6 * k, 6) * multifactorial(6 * k + 4, 6));
    double p3 = std::pow(3.0, -2.0 * k);
    c[static_cast<std::size_t>(6 * k + 1) - 1] = ca * ak.to_double() * p3;
    c[static_cast<std::size_t>(6 * k + 5) - 1] = cb * bk.to_double() * p3;
  }
  return PhiSeries(1, std::move(c));
}

PhiSeries PhiSeries::pow(int n, int j_max) const {
  if (n < 1) throw DomainError("PhiSeries power must be >= 1");
  PhiSeries acc = *this;
  auto truncate = [j_max](PhiSeries s) {
    int keep = j_max - s.min_j_ + 1;
    if (keep < 0) keep = 0;
    if (static_cast<int>(s.c_.size()) > keep) s.c_.resize(static_cast<std::size_t>(keep));
    return s;
  };
  acc = truncate(acc);
  for (int e = 1; e < n; ++e) {
    std::vector<double> prod(acc.c_.size() + c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < acc.c_.size(); ++i) {
      if (acc.c_[i] == 0) continue;
      for (std::size_t j = 0; j < c_.size(); ++j) prod[i + j] += acc.c_[i] * c_[j];
    }
    acc = truncate(PhiSeries(acc.min_j_ + min_j_, std::move(prod)));
  }
  return acc;
}

PhiSeries PhiSeries::derivative() const {
  // d/dt t^(-j/3) = (-j/3) t^(-(j+3)/3)
  std::vector<double> d(c_.size(), 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    int j = min_j_ + static_cast<int>(i);
    d[i] = c_[i] * (-j / 3.0);
  }
  return PhiSeries(min_j_ + 3, std::move(d));
}

double PhiSeries::eval(double t) const {
  if (t <= 0) throw DomainError("PhiSeries valid for t > 0");
  const double u = std::pow(t, -1.0 / 3.0);
  double acc = 0;
  double up = std::pow(u, min_j_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    acc += c_[i] * up;
    up *= u;
  }
  return acc;
}

double phi_asymptotic(double t, int k_terms) {
  if (t == 0) throw DomainError("phi expansion is at infinity; t = 0 rejected");
  if (k_terms < 1 || k_terms > 64) throw DomainError("phi expansion terms must be in [1, 64]");
  static const std::vector<PhiSeries> cache = [] {
    std::vector<PhiSeries> v;
    v.reserve(65);
    for (int k = 0; k <= 64; ++k) v.push_back(PhiSeries::phi(std::max(k, 1)));
    return v;
  }();
  return cache[static_cast<std::size_t>(k_terms)].eval(std::abs(t));
}

double airy_phi(double t) {
  if (t <= 0) throw DomainError("airy_phi needs t > 0");
  double arg = std::pow(t, -4.0 / 3.0) / (4.0 * std::pow(3.0, 4.0 / 3.0));
  if (arg > 4.0) throw DomainError("airy_phi: argument too large for the series cross-check");
  return std::sqrt(2.0 * M_PI) * std::pow(3.0, -1.0 / 3.0) * std::pow(t, -1.0 / 3.0) *
         std::exp(std::pow(t, -2.0) / 108.0) * airy_ai(arg);
}

std::vector<std::complex<double>> j_values(double t_prime, int l_max) {
  if (t_prime <= 0) throw DomainError("j_values needs T' > 0");
  std::vector<std::complex<double>> j(static_cast<std::size_t>(std::max(l_max, 3)) + 1);
  const std::complex<double> I(0, 1);
  const double tol = 1e-13;

  // l = 1, 2: int_0^inf e^{it} t^(-p) = pi/(2 Gamma(p) cos(p pi/2))
  //                                   + i pi/(2 Gamma(p) sin(p pi/2)), p = l/3,
  // minus the finite part, desingularized by t = s^(3/(3-l)).
  for (int l = 1; l <= 2; ++l) {
    double p = l / 3.0;
    double full_re = M_PI / (2.0 * std::tgamma(p) * std::cos(p * M_PI / 2));
    double full_im = M_PI / (2.0 * std::tgamma(p) * std::sin(p * M_PI / 2));
    double head_re, head_im;
    if (l == 1) {
      // t = s^(3/2): dt = (3/2) s^(1/2) ds, integrand -> (3/2) e^{i s^(3/2)}
      double upper = std::pow(t_prime, 2.0 / 3.0);
      head_re = integrate([](double s) { return std::cos(std::pow(s, 1.5)); }, 0, upper, tol).value * 1.5;
      head_im = integrate([](double s) { return std::sin(std::pow(s, 1.5)); }, 0, upper, tol).value * 1.5;
    } else {
      // t = s^3: integrand -> 3 e^{i s^3}
      double upper = std::pow(t_prime, 1.0 / 3.0);
      head_re = integrate([](double s) { return std::cos(s * s * s); }, 0, upper, tol).value * 3.0;
      head_im = integrate([](double s) { return std::sin(s * s * s); }, 0, upper, tol).value * 3.0;
    }
    j[static_cast<std::size_t>(l)] = std::complex<double>(full_re - head_re, full_im - head_im);
  }

  // l = 3: int_{T'}^inf e^{it}/t dt = -Ci(T') + i (pi/2 - Si(T'))
  j[3] = std::complex<double>(-cosine_integral(t_prime), M_PI / 2 - sine_integral(t_prime));

  for (int l = 1; l + 3 <= l_max; ++l)
    j[static_cast<std::size_t>(l) + 3] =
        (3.0 / l) * (std::exp(I * t_prime) / std::pow(t_prime, l / 3.0) + I * j[static_cast<std::size_t>(l)]);

  j.resize(static_cast<std::size_t>(std::max(l_max, 3)) + 1);
  return j;
}

double PhiEvaluator::operator()(double t) const {
  double at = std::abs(t);
  if (at >= t_switch) return phi_asymptotic(at, k_terms);
  return phi_quadrature(at, abs_tol);
}

}  // namespace holopow
