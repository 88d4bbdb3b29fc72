#include "holopow/ivp.hpp"

#include <algorithm>
#include <cmath>

#include "holopow/indicial.hpp"

namespace holopow {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kC[7] = {0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
constexpr double kB5[7] = {35.0 / 384, 0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84, 0};
constexpr double kB4[7] = {5179.0 / 57600,    0,           7571.0 / 16695, 393.0 / 640,
                           -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

struct CompanionSystem {
  std::vector<Poly> coeffs;  // polynomial coefficients, index = Dx power
  int order = 0;

  Eigen::VectorXcd rhs(double x, const Eigen::VectorXcd& y) const {
    Eigen::VectorXcd dy(order);
    for (int k = 0; k + 1 < order; ++k) dy(k) = y(k + 1);
    std::complex<double> lead = eval_numeric(coeffs[static_cast<std::size_t>(order)], x);
    std::complex<double> acc = 0;
    for (int k = 0; k < order; ++k)
      acc += eval_numeric(coeffs[static_cast<std::size_t>(k)], x) * y(k);
    dy(order - 1) = -acc / lead;
    return dy;
  }
};

std::vector<double> real_leading_zeros(const Poly& lead) {
  std::vector<double> zeros;
  if (lead.degree() < 1) return zeros;
  for (const auto& z : companion_roots(lead))
    if (std::abs(z.imag()) < 1e-9) zeros.push_back(z.real());
  return zeros;
}

void check_point_clear(double x, const std::vector<double>& zeros, double radius) {
  for (double z : zeros)
    if (std::abs(x - z) < radius)
      throw DomainError("integration path within the exclusion radius of a singular point at x = " +
                        std::to_string(z));
}

void check_step_clear(double a, double b, const std::vector<double>& zeros, double radius) {
  double lo = std::min(a, b) - radius, hi = std::max(a, b) + radius;
  for (double z : zeros)
    if (z > lo && z < hi)
      throw DomainError("integration step crosses the exclusion radius of a singular point at x = " +
                        std::to_string(z));
}

// One direction: integrate from x0 to the ordered targets (all on one side).
void sweep(const CompanionSystem& sys, double x0, const Eigen::VectorXcd& y0,
           const std::vector<double>& targets, const std::vector<double>& zeros,
           const IVPOptions& opt, std::vector<std::pair<double, Eigen::VectorXcd>>& out,
           IVPSolution::Stats& stats) {
  if (targets.empty()) return;
  double x = x0;
  Eigen::VectorXcd y = y0;
  const int dir = targets.back() > x0 ? 1 : -1;
  double h = dir * std::min(0.1, std::abs(targets.front() - x0) + 0.01);
  std::size_t ti = 0;

  Eigen::VectorXcd k[7];
  while (ti < targets.size()) {
    if (stats.steps + stats.rejected > opt.max_steps)
      throw ToleranceError("ivp_solve exceeded the step budget", std::abs(h));
    double target = targets[ti];
    if (target == x) {
      out.emplace_back(x, y);
      ++ti;
      continue;
    }
    bool hit = false;
    const double h_free = h;
    if ((dir > 0 && x + h >= target) || (dir < 0 && x + h <= target)) {
      h = target - x;
      hit = true;
    }
    check_step_clear(x, x + h, zeros, opt.exclusion_radius);

    k[0] = sys.rhs(x, y);
    for (int s = 1; s < 7; ++s) {
      Eigen::VectorXcd ys = y;
      for (int j = 0; j < s; ++j)
        if (kA[s][j] != 0) ys += (h * kA[s][j]) * k[j];
      k[s] = sys.rhs(x + kC[s] * h, ys);
    }
    Eigen::VectorXcd y5 = y, err = Eigen::VectorXcd::Zero(sys.order);
    for (int s = 0; s < 7; ++s) {
      if (kB5[s] != 0) y5 += (h * kB5[s]) * k[s];
      double d = kB5[s] - kB4[s];
      if (d != 0) err += (h * d) * k[s];
    }
    double scale = opt.abs_tol + opt.rel_tol * std::max(y.norm(), y5.norm());
    double err_norm = err.norm() / scale;

    if (err_norm <= 1.0) {
      x += h;
      y = std::move(y5);
      ++stats.steps;
      stats.max_residual = std::max(stats.max_residual, err.norm());
      if (hit) {
        out.emplace_back(x, y);
        ++ti;
        h = h_free;  // resume with the unclamped step
      }
    } else {
      ++stats.rejected;
    }
    double f = 0.9 * std::pow(std::max(err_norm, 1e-10), -0.2);
    h *= std::clamp(f, 0.2, 5.0);
    if (std::abs(h) < 1e-14) throw ToleranceError("ivp_solve step size underflow", std::abs(h));
  }
}

}  // namespace

IVPSolution ivp_solve(const DiffOperator& op, double x0, const Eigen::VectorXcd& y0,
                      std::vector<double> targets, const IVPOptions& options) {
  DiffOperator canon = canonicalize(op);
  const int r = canon.order();
  if (r < 1) throw DomainError("ivp_solve needs an operator of order >= 1");
  if (y0.size() != r) throw DomainError("ivp_solve: initial vector must have order entries");

  CompanionSystem sys;
  sys.order = r;
  sys.coeffs.reserve(static_cast<std::size_t>(r) + 1);
  for (int kk = 0; kk <= r; ++kk) sys.coeffs.push_back(canon.coeff(kk).num());

  std::vector<double> zeros = real_leading_zeros(sys.coeffs.back());
  check_point_clear(x0, zeros, options.exclusion_radius);
  for (double t : targets) check_point_clear(t, zeros, options.exclusion_radius);

  std::vector<double> lower, upper;
  for (double t : targets) (t < x0 ? lower : upper).push_back(t);
  std::sort(lower.begin(), lower.end(), std::greater<>());
  std::sort(upper.begin(), upper.end());

  IVPSolution sol;
  std::vector<std::pair<double, Eigen::VectorXcd>> pts;
  sweep(sys, x0, y0, lower, zeros, options, pts, sol.stats);
  sweep(sys, x0, y0, upper, zeros, options, pts, sol.stats);
  std::sort(pts.begin(), pts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [x, y] : pts) {
    sol.grid.push_back(x);
    sol.values.push_back(std::move(y));
  }
  return sol;
}

}  // namespace holopow
