#include "holopow/inversion.hpp"

#include <cmath>

#include "holopow/errors.hpp"
#include "holopow/quadrature.hpp"

namespace holopow {

InitialValueJob default_initial_value_job(int n, double x0) {
  InitialValueJob job;
  job.n = n;
  job.x0 = x0;
  job.k_max = 3 * n - 1;
  job.m = std::max(6, 3 * n);  // keeps k_max < m + n/3
  job.T = 10.0;
  return job;
}

std::vector<double> initial_values(const InitialValueJob& job) {
  const int n = job.n, m = job.m, k_max = job.k_max;
  if (n < 1) throw DomainError("initial_values: n must be >= 1");
  if (job.x0 == 0)
    throw DomainError("initial_values: x0 = 0 is a singular point of the density equation");
  if (m < 1) throw DomainError("initial_values: m must be >= 1");
  if (!(3 * k_max < 3 * m + n))
    throw DomainError("initial_values: validity condition k_max < m + n/3 violated");
  const double T = job.T;
  if (T <= 0) throw DomainError("initial_values: T must be positive");

  const double x0 = std::abs(job.x0);
  const bool flip = job.x0 < 0;  // density is even: f^(k)(-x) = (-1)^k f^(k)(x)

  // expansion of phi^n and its first m derivatives, truncated where terms at
  // T are far below double precision
  const int j_max = std::max(3 * (m + k_max) + n + 60,
                             static_cast<int>(std::ceil(3.0 * 40.0 / std::log10(std::max(T, 1.5)))));
  std::vector<PhiSeries> dseries;
  dseries.reserve(static_cast<std::size_t>(m) + 1);
  dseries.push_back(PhiSeries::phi(48).pow(n, j_max));
  for (int d = 1; d <= m; ++d) dseries.push_back(dseries.back().derivative());

  // the expansion converges for all t > 0 and stays fully accurate in double
  // precision down to about 0.5, so quadrature is only needed near the origin
  constexpr double kSeriesFloor = 0.75;
  auto phi_n = [&](double t) {
    if (t >= kSeriesFloor) return dseries[0].eval(t);
    return std::pow(phi_quadrature(t), n);
  };

  const std::complex<double> I(0, 1);
  const double t_prime = T * x0;
  const std::vector<std::complex<double>> J = j_values(t_prime, j_max + 3);

  auto unit_ipow = [](int e) {
    switch (((e % 4) + 4) % 4) {
      case 0: return std::complex<double>(1, 0);
      case 1: return std::complex<double>(0, 1);
      case 2: return std::complex<double>(-1, 0);
      default: return std::complex<double>(0, -1);
    }
  };
  auto perm = [](int a, int b) {  // a! / b!, a >= b
    Int w = factorial(a) / factorial(b);
    return w.get_d();
  };

  std::vector<double> out(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) {
    // head: int_0^T (it)^k phi_n(t) e^{i x0 t} dt
    auto head_f = [&](double t) {
      return std::pow(I * t, k) * phi_n(t) * std::exp(I * (x0 * t));
    };
    double head_tol = 1e-12 * std::max(1.0, std::pow(T, k));
    std::complex<double> head = integrate_complex(head_f, 0, T, head_tol).value;

    // boundary: e^{iTx0} sum_{j=1}^m phi_n^(j-1)(T)
    //           sum_{l=0}^k C(k,l) (j+l-1)!/(j-1)! i^(k+j+l) x0^-(j+l) T^(k-l)
    std::complex<double> boundary = 0;
    for (int j = 1; j <= m; ++j) {
      double dv = dseries[static_cast<std::size_t>(j) - 1].eval(T);
      std::complex<double> inner = 0;
      for (int l = 0; l <= k; ++l) {
        double w = binomial(k, l).get_d() * perm(j + l - 1, j - 1);
        inner += w * unit_ipow(k + j + l) * std::pow(x0, -(j + l)) * std::pow(T, k - l);
      }
      boundary += dv * inner;
    }
    boundary *= std::exp(I * (T * x0));

    // tail: sum_{l=0}^k C(k,l) (m+l-1)!/(m-1)! i^(m+k+l) x0^-(m+l)
    //       int_T^inf t^(k-l) phi_n^(m)(t) e^{i x0 t} dt,
    // with the integral expanded term-wise through J-values
    std::complex<double> tail = 0;
    const PhiSeries& dm = dseries[static_cast<std::size_t>(m)];
    for (int l = 0; l <= k; ++l) {
      std::complex<double> integral = 0;
      for (std::size_t idx = 0; idx < dm.coeffs().size(); ++idx) {
        double coef = dm.coeffs()[idx];
        if (coef == 0) continue;
        int j = dm.min_j() + static_cast<int>(idx);
        int lj = j - 3 * (k - l);  // t^(k-l) t^(-j/3) = t^(-lj/3)
        if (lj < 1 || lj >= static_cast<int>(J.size())) continue;
        // int_T^inf t^(-lj/3) e^{i x0 t} dt = x0^(lj/3 - 1) J_lj(T x0)
        integral += coef * std::pow(x0, lj / 3.0 - 1.0) * J[static_cast<std::size_t>(lj)];
      }
      double w = binomial(k, l).get_d() * perm(m + l - 1, m - 1);
      tail += w * unit_ipow(m + k + l) * std::pow(x0, -(m + l)) * integral;
    }

    double v = (head + boundary + tail).real() / M_PI;
    if (flip && k % 2 == 1) v = -v;
    out[static_cast<std::size_t>(k)] = v;
  }
  return out;
}

}  // namespace holopow
