#include "holopow/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "holopow/errors.hpp"

namespace holopow {

namespace {

class BoxMuller {
public:
  explicit BoxMuller(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01(), u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

private:
  double uniform01() {
    // (0, 1]: avoids log(0)
    return (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
  }

  std::mt19937_64 rng_;
  double spare_ = 0;
  bool have_spare_ = false;
};

}  // namespace

MonteCarloDensity monte_carlo_density(int n, const std::vector<double>& xs, std::size_t samples,
                                      std::uint64_t seed) {
  if (n < 1) throw DomainError("monte_carlo_density needs n >= 1");
  if (samples < 10000) throw DomainError("monte_carlo_density needs at least 1e4 samples");

  BoxMuller gen(seed);
  std::vector<double> sums(samples);
  for (double& s : sums) {
    double acc = 0;
    for (int j = 0; j < n; ++j) {
      double z = gen.next();
      acc += z * z * z;
    }
    s = acc;
  }
  std::sort(sums.begin(), sums.end());

  const double m = static_cast<double>(samples);
  double mean = 0;
  for (double s : sums) mean += s;
  mean /= m;
  double var = 0;
  for (double s : sums) var += (s - mean) * (s - mean);
  var /= (m - 1);
  double sd = std::sqrt(var);
  double iqr = sums[static_cast<std::size_t>(0.75 * m)] - sums[static_cast<std::size_t>(0.25 * m)];
  double h = 0.9 * std::min(sd, iqr / 1.34) * std::pow(m, -0.2);  // Silverman

  const double inv = 1.0 / (m * h * std::sqrt(2.0 * M_PI));
  const double rk = 0.5 / std::sqrt(M_PI);  // int K^2 for the Gaussian kernel
  MonteCarloDensity out;
  out.bandwidth = h;
  out.estimate.reserve(xs.size());
  out.standard_error.reserve(xs.size());
  const double cut = 8.0 * h;
  for (double x : xs) {
    auto lo = std::lower_bound(sums.begin(), sums.end(), x - cut);
    auto hi = std::upper_bound(sums.begin(), sums.end(), x + cut);
    double acc = 0;
    for (auto it = lo; it != hi; ++it) {
      double u = (x - *it) / h;
      acc += std::exp(-0.5 * u * u);
    }
    double f = acc * inv;
    out.estimate.push_back(f);
    out.standard_error.push_back(std::sqrt(std::max(f, 1e-300) * rk / (m * h)));
  }
  return out;
}

}  // namespace holopow
