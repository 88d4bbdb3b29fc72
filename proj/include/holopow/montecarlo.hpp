#pragma once

#include <cstdint>
#include <vector>

namespace holopow {

struct MonteCarloDensity {
  std::vector<double> estimate;
  std::vector<double> standard_error;
  double bandwidth = 0;
};

/// Gaussian-kernel density estimate of the law of X_1^3 + ... + X_n^3 for
/// independent standard normals, evaluated at xs. Deterministic for a fixed
/// seed (own Box-Muller on top of mt19937_64); Silverman bandwidth.
MonteCarloDensity monte_carlo_density(int n, const std::vector<double>& xs, std::size_t samples,
                                      std::uint64_t seed);

}  // namespace holopow
