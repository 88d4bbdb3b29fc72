// Acceptance suite: one timed pass/fail line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "holopow/indicial.hpp"
#include "holopow/inversion.hpp"
#include "holopow/ivp.hpp"
#include "holopow/montecarlo.hpp"
#include "holopow/stats.hpp"
#include "holopow/text.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace holopow;
using holopow::testing::Rng;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

GaussianRational g(int num, int den = 1) { return GaussianRational(Rational(num, den)); }

// 1. printed Q matrix and kernel, exact
void criterion_qx_fixture() {
  ExQxFixture fx = fixture_ex_qx();
  QMatrix q = build_q(fx.seed, fx.n);
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 4; ++j)
      require(q.q(i, j) == fx.q(i, j), "Q entry mismatch at (" + std::to_string(i) + "," +
                                           std::to_string(j) + ")");
  auto v = kernel_vector(q);
  require(v.size() == fx.kernel.size(), "kernel length");
  for (std::size_t k = 0; k < v.size(); ++k)
    require(v[k] == fx.kernel[k], "kernel entry v_" + std::to_string(k));
}

// 2. printed order-3 beta density operator at four parameter pairs
void criterion_f3() {
  for (auto [a, b] : {std::pair<Rational, Rational>{Rational(1), Rational(1)},
                      {Rational(2), Rational(3)},
                      {Rational(1, 2), Rational(5, 2)},
                      {Rational(3), Rational(3)}}) {
    DensityODE ode = beta_density_ode(BetaParams(a, b, 3));
    require(equal_up_to_scalar(ode.as_diff_operator(), fixture_f3(a, b)),
            "mismatch at a=" + a.str() + " b=" + b.str());
  }
}

// 3. printed order-12 cube density operator
void criterion_f4() {
  require(equal_up_to_scalar(cube_density_ode(4).as_diff_operator(), fixture_f4()),
          "order-12 operator mismatch");
}

// 4. density operator orders
void criterion_orders() {
  Rng rng(401);
  for (int n = 1; n <= 8; ++n)
    for (int t = 0; t < 10; ++t) {
      Rational a(rng.uniform(1, 12), rng.uniform(1, 5));
      Rational b(rng.uniform(1, 12), rng.uniform(1, 5));
      DensityODE ode = beta_density_ode(BetaParams(a, b, n));
      require(ode.order() == n, "beta order at n=" + std::to_string(n));
    }
  for (int n = 1; n <= 5; ++n)
    require(cube_density_ode(n).order() == 3 * n, "cube order at n=" + std::to_string(n));
}

// 5. degree theorem bound; attained for the beta and cube seeds
void criterion_degree_bound() {
  Rng rng(402);
  for (int t = 0; t < 100; ++t) {
    SecondOrderSeed s = rng.degree_bound_seed();
    int n = rng.uniform(1, 5);
    long bound = degree_bound(s, n);
    long maxdeg = 0;
    for (const Poly& v : power_operator(s, n).kernel)
      if (!v.is_zero()) maxdeg = std::max<long>(maxdeg, v.degree());
    require(maxdeg <= bound, "bound violated");
  }
  for (int n = 1; n <= 5; ++n) {
    SecondOrderSeed beta = beta_char_seed(Rational(2), Rational(3));
    long dmax = 0;
    for (const Poly& v : power_operator(beta, n).kernel)
      if (!v.is_zero()) dmax = std::max<long>(dmax, v.degree());
    require(dmax == degree_bound(beta, n) && dmax == n, "beta bound not attained");

    SecondOrderSeed cube = cube_char_seed();
    dmax = 0;
    for (const Poly& v : power_operator(cube, n).kernel)
      if (!v.is_zero()) dmax = std::max<long>(dmax, v.degree());
    require(dmax == degree_bound(cube, n) && dmax == 3 * n, "cube bound not attained");
  }
}

// 6. exponent theorem for euler seeds
void criterion_exponents() {
  Rng rng(403);
  for (int t = 0; t < 25; ++t) {
    GaussianRational l1{rng.rational(3, 2)}, l2{rng.rational(3, 2)};
    int n = rng.uniform(1, 6);
    PowerODE p = power_operator(Rng::euler_seed(l1, l2), n);
    IndicialResult r = indicial(p.op, SingularPoint::finite(g(0)));
    require(r.regular, "power operator regular at 0");
    for (const auto& mu : predicted_exponents(l1, l2, n).values)
      require(exponent_check(r, mu), "predicted exponent is a root");
    require(*r.poly == char_poly_tridiag(eig_matrix(l1, l2, n)),
            "indicial polynomial equals the matrix characteristic polynomial");
  }
}

// 7. eigenvector relations and the terminating-series recursion
void criterion_eigenvectors() {
  Rng rng(404);
  int distinct = 0;
  while (distinct < 20) {
    int n = rng.uniform(1, 10);
    GaussianRational z{rng.rational(5, 3)};
    if (z == g(1) || z.is_zero()) continue;
    GRatMatrix mp = eig_matrix_scaled(n, z);
    for (int k = 0; k <= n; ++k) {
      GaussianRational mu = GaussianRational(k) * z + GaussianRational(n - k);
      GRatVector vk = eig_vector(n, k, z);
      GRatVector res = mu * vk - mp * vk;
      for (int l = 0; l <= n; ++l) require(res(l).is_zero(), "eigen relation");
    }
    ++distinct;
  }
  for (int n : {2, 5, 10}) {  // z = 1 generalized chains
    GRatMatrix mp = eig_matrix_scaled(n, g(1));
    GRatVector prev;
    for (int k = 0; k <= n; ++k) {
      GRatVector vk = eig_vector(n, k, g(1));
      GRatVector lhs = GaussianRational(n) * vk - mp * vk;
      for (int l = 0; l <= n; ++l) {
        GaussianRational want = k == 0 ? g(0) : GaussianRational(k) * prev(l);
        require(lhs(l) == want, "z = 1 chain");
      }
      prev = vk;
    }
  }
  Rng zrng(405);
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k <= n; ++k)
      for (int l = 0; l <= n; ++l)
        for (int zi = 0; zi < 5; ++zi) {
          GaussianRational z = zrng.nonzero_gaussian(4, 3);
          try {
            require(check_2f1_recursion(k, l, n, z), "2F1 recursion");
          } catch (const UndefinedParameterError&) {
            // parameter outside the defined range
          }
        }
}

// 8. cube exponent ladder at infinity and its Fourier image
void criterion_cube_ladder() {
  for (int n = 1; n <= 5; ++n) {
    PowerODE p = power_operator(cube_char_seed(), n);
    IndicialResult r = indicial(p.op, SingularPoint::infinity());
    require(r.regular, "regular at infinity");
    std::vector<GaussianRational> want;
    for (int k = 0; k <= n; ++k) want.emplace_back(Rational(-(n + 4 * k), 3));
    require(r.exponents_exact.has_value(), "exact exponents");
    std::vector<GaussianRational> got = *r.exponents_exact;
    std::sort(got.begin(), got.end(), [](const GaussianRational& a, const GaussianRational& b) {
      return a.re() < b.re();
    });
    std::sort(want.begin(), want.end(), [](const GaussianRational& a, const GaussianRational& b) {
      return a.re() < b.re();
    });
    require(got == want, "ladder at n=" + std::to_string(n));

    auto mapped = fourier_exponents(want, 3 * n, n + 1, FourierSide::kInfinityToZero);
    IndicialResult r0 = indicial(cube_density_ode(n).as_diff_operator(),
                                 SingularPoint::finite(g(0)));
    require(r0.regular, "density regular at 0");
    for (const auto& mu : mapped) require(exponent_check(r0, mu), "mapped exponent");
    std::vector<GaussianRational> printed;
    for (int k = 0; k <= n; ++k) printed.emplace_back(Rational(n + 4 * k, 3) - Rational(1));
    for (int j = 0; j <= 2 * n - 2; ++j) printed.emplace_back(Rational(j));
    std::sort(printed.begin(), printed.end(), [](const GaussianRational& a, const GaussianRational& b) {
      return a.re() < b.re();
    });
    std::vector<GaussianRational> mapped_sorted = mapped;
    std::sort(mapped_sorted.begin(), mapped_sorted.end(),
              [](const GaussianRational& a, const GaussianRational& b) { return a.re() < b.re(); });
    require(mapped_sorted == printed, "mapped ladder equals the printed exponents");
  }
}

// 9. uniform-sum density against the exact convolution oracle
void criterion_irwin_hall() {
  for (int n = 2; n <= 8; ++n) {
    PiecewisePolyDensity d = irwin_hall_density(n);
    auto oracle = holopow::testing::convolved_uniform_density(n);
    for (int k = 0; k < n; ++k)
      require(d.piece(k) == oracle[static_cast<std::size_t>(k)],
              "piece " + std::to_string(k) + " at n=" + std::to_string(n));
    for (int k = 1; k < n; ++k) {
      RealPoly left = d.piece(k - 1), right = d.piece(k);
      for (int order = 0; order <= n - 2; ++order) {
        require(left.eval(Rational(k)) == right.eval(Rational(k)), "smoothness");
        left = left.derivative();
        right = right.derivative();
      }
    }
    Rational mass(0);
    for (int k = 0; k < n; ++k) {
      RealPoly p = d.piece(k);
      std::vector<Rational> anti(static_cast<std::size_t>(p.degree()) + 2, Rational(0));
      for (int j = 0; j <= p.degree(); ++j)
        anti[static_cast<std::size_t>(j) + 1] = p.coeff(j) / Rational(j + 1);
      RealPoly ap{std::move(anti)};
      mass += ap.eval(Rational(k + 1)) - ap.eval(Rational(k));
    }
    require(mass == Rational(1), "unit mass");
  }
}

// 10. numeric densities: closed form at n = 1, Monte Carlo at n = 2, 3
void criterion_numeric_density() {
  {
    DiffOperator op = cube_density_ode(1).as_diff_operator();
    auto jet = holopow::testing::cube_density_closed_form(1.0);
    Eigen::VectorXcd y0(3);
    y0 << jet.g, jet.g1, jet.g2;
    std::vector<double> xs;
    for (double x = 0.5; x <= 3.0 + 1e-9; x += 0.1) xs.push_back(x);
    IVPSolution sol = ivp_solve(op, 1.0, y0, xs);
    for (std::size_t i = 0; i < sol.grid.size(); ++i) {
      double want = holopow::testing::cube_density_closed_form(sol.grid[i]).g;
      require(std::abs(sol.values[i](0).real() - want) < 1e-6,
              "n=1 closed form at x=" + std::to_string(sol.grid[i]));
    }
  }
  for (int n : {2, 3}) {
    DiffOperator op = cube_density_ode(n).as_diff_operator();
    const int r = 3 * n;
    std::vector<double> stack = initial_values(default_initial_value_job(n, 1.0));
    Eigen::VectorXcd y0(r);
    for (int k = 0; k < r; ++k) y0(k) = stack[static_cast<std::size_t>(k)];
    std::vector<double> xs;
    for (double x = 0.5; x <= 4.0 + 1e-9; x += 0.05) xs.push_back(x);
    IVPSolution sol = ivp_solve(op, 1.0, y0, xs);
    auto mc = monte_carlo_density(n, sol.grid, 1000000, 20260809 + n);
    double sup = 0;
    for (std::size_t i = 0; i < sol.grid.size(); ++i)
      sup = std::max(sup, std::abs(sol.values[i](0).real() - mc.estimate[i]));
    require(sup < 2e-2, "n=" + std::to_string(n) + " sup deviation " + std::to_string(sup));
  }
}

// 11. characteristic-function cross-validation
void criterion_phi_crosscheck() {
  for (double t : {2.0, 2.7, 3.5, 5.0, 8.0, 11.0, 17.0, 26.0, 38.0, 50.0}) {
    double q = phi_quadrature(t), a = phi_asymptotic(t), ai = airy_phi(t);
    require(std::abs(q - a) < 1e-8, "quadrature vs expansion at t=" + std::to_string(t));
    require(std::abs(q - ai) < 1e-8, "quadrature vs Airy at t=" + std::to_string(t));
    require(std::abs(a - ai) < 1e-8, "expansion vs Airy at t=" + std::to_string(t));
  }
  for (double t : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    PhiDerivs d = phi_quadrature_derivs(t);
    double res = 27 * t * t * t * d.d2phi + (81 * t * t + 1) * d.dphi + 15 * t * d.phi;
    require(std::abs(res) < 1e-8, "seed-equation residual at t=" + std::to_string(t));
  }
}

// 12. randomized property suites, >= 200 instances each
void criterion_property_suites() {
  Rng rng(406);
  for (int t = 0; t < 200; ++t) {
    WeylElement u = rng.weyl(6, 5), v = rng.weyl(6, 5);
    require(fourier(u * v) == fourier(u) * fourier(v), "fourier homomorphism");
    require(fourier(fourier(u)) == u.negate_generators(), "fourier involution sign rule");
  }
  for (int t = 0; t < 200; ++t) {
    WeylElement w = rng.weyl(5, 4);
    auto [back, shift] = theta_to_weyl(to_theta_form(w));
    require(shift == 0 && back == w, "theta form round trip");
  }
  for (int t = 0; t < 200; ++t) {
    SecondOrderSeed s{RatFun(rng.laurent()), RatFun(rng.laurent())};
    int n = rng.uniform(1, 6);
    QMatrix q = build_q(s, n);
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j < i; ++j) require(q.q(i, j).is_zero(), "triangularity");
      require(q.q(i, i) == RatFun(GaussianRational(Rational(falling_factorial(n, i)))),
              "diagonal falling factorial");
    }
  }
  for (int t = 0; t < 200; ++t) {
    SecondOrderSeed s{rng.rational_function(2), rng.rational_function(2)};
    require(equal_up_to_scalar(power_operator(s, 1).op, s.as_operator()), "n = 1 recovery");
  }
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  std::function<void()> fn;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "printed Q matrix and kernel (exact)", 1.0, criterion_qx_fixture},
      {2, "printed beta density operator, four parameter pairs", 5.0, criterion_f3},
      {3, "printed 12th-order cube density operator", 30.0, criterion_f4},
      {4, "density operator orders n and 3n", 0, criterion_orders},
      {5, "coefficient degree bound, attained for beta and cube", 0, criterion_degree_bound},
      {6, "power-equation exponents match the tridiagonal matrix", 0, criterion_exponents},
      {7, "eigenvector relations and terminating-series recursion", 0, criterion_eigenvectors},
      {8, "cube exponent ladder at infinity and its Fourier image", 0, criterion_cube_ladder},
      {9, "uniform-sum density equals the exact convolution", 0, criterion_irwin_hall},
      {10, "numeric cube densities vs closed form and Monte Carlo", 180.0, criterion_numeric_density},
      {11, "characteristic-function cross-validation", 0, criterion_phi_crosscheck},
      {12, "randomized property suites (>= 200 instances each)", 0, criterion_property_suites},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = true;
    try {
      c.fn();
    } catch (const Failure& f) {
      pass = false;
      detail = f.what;
    } catch (const std::exception& e) {
      pass = false;
      detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (pass && c.limit_seconds > 0 && secs > c.limit_seconds) {
      pass = false;
      detail = "runtime limit " + std::to_string(c.limit_seconds) + "s exceeded";
    }
    std::printf("[%s] %2d. %-58s %8.2fs%s%s\n", pass ? "PASS" : "FAIL", c.number, c.name, secs,
                detail.empty() ? "" : "  -- ", detail.c_str());
    if (!pass) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
