#pragma once

#include <vector>

#include "holopow/phi.hpp"

namespace holopow {

/// Computes f_n^(k)(x0), k = 0..k_max, for the density f_n of a sum of n
/// cubed standard normals, by splitting the inversion integral at T: a finite
/// quadrature, a boundary sum using m expansion-derivatives of phi^n at T,
/// and a closed-form oscillatory tail via j_values. The split is valid for
/// k < m + n/3.
struct InitialValueJob {
  int n = 1;
  double x0 = 1.0;
  int m = 6;
  double T = 10.0;
  int k_max = 0;
};

/// Job covering the full derivative stack 0..3n-1 of the order-3n density
/// equation, with m raised to keep the validity condition.
InitialValueJob default_initial_value_job(int n, double x0);

std::vector<double> initial_values(const InitialValueJob& job);

}  // namespace holopow
