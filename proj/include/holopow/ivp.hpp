#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

#include "holopow/weyl.hpp"

namespace holopow {

struct IVPOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-13;
  /// Integration is refused within this distance of a real zero of the
  /// leading coefficient.
  double exclusion_radius = 1e-3;
  std::size_t max_steps = 4000000;
};

struct IVPSolution {
  std::vector<double> grid;              // evaluation points, ascending
  std::vector<Eigen::VectorXcd> values;  // per point: f, f', ..., f^(r-1)
  struct Stats {
    std::size_t steps = 0;
    std::size_t rejected = 0;
    double max_residual = 0;  // largest accepted local error estimate
  } stats;
};

/// Integrates the order-r linear equation op (as a first-order companion
/// system) from x0 with initial derivatives y0 = (f, ..., f^(r-1))(x0) and
/// reports dense values at the target points. Targets may lie on both sides
/// of x0; the path must stay clear of zeros of the leading coefficient.
IVPSolution ivp_solve(const DiffOperator& op, double x0, const Eigen::VectorXcd& y0,
                      std::vector<double> targets, const IVPOptions& options = {});

}  // namespace holopow
