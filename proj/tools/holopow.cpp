// holopow: exact power-equation construction for second-order seeds, with
// density applications (beta sums, uniform sums, sums of cubed normals).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "holopow/indicial.hpp"
#include "holopow/inversion.hpp"
#include "holopow/ivp.hpp"
#include "holopow/montecarlo.hpp"
#include "holopow/stats.hpp"
#include "holopow/text.hpp"
#include "holopow/verify.hpp"

namespace {

using namespace holopow;
using nlohmann::json;

struct GridSpec {
  double lo = 0.5, hi = 4.0, step = 0.05;
};

GridSpec parse_grid(const std::string& s) {
  GridSpec g;
  char c1, c2;
  std::istringstream is(s);
  if (!(is >> g.lo >> c1 >> g.hi >> c2 >> g.step) || c1 != ':' || c2 != ':' || g.step <= 0)
    throw DomainError("grid must be lo:hi:step with positive step");
  return g;
}

DiffOperator load_operator(const std::string& text, const std::string& file) {
  if (!text.empty()) return operator_from_text(text);
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw DomainError("cannot open " + file);
    json j;
    in >> j;
    return operator_from_json(j);
  }
  throw DomainError("provide --op TEXT or --in FILE.json");
}

void print_operator(const DiffOperator& op, bool as_json) {
  if (as_json)
    std::cout << operator_to_json(op).dump() << "\n";
  else
    std::cout << to_text(op) << "\n";
}

int run_power_ode(const std::string& a0, const std::string& a1, int n, bool as_json) {
  SecondOrderSeed seed{parse_rational_function(a0), parse_rational_function(a1)};
  PowerODE p = power_operator(seed, n);
  if (as_json) {
    json j = operator_to_json(p.op);
    j["n"] = n;
    std::cout << j.dump() << "\n";
  } else {
    print_operator(p.op, false);
  }
  return 0;
}

int run_fourier(const std::string& text, const std::string& file, bool as_json) {
  DiffOperator op = load_operator(text, file);
  DiffOperator hat = canonicalize(to_diff_operator(fourier(to_weyl(canonicalize(op)))));
  print_operator(hat, as_json);
  return 0;
}

int run_exponents(const std::string& text, const std::string& file, const std::string& point,
                  bool as_json) {
  DiffOperator op = load_operator(text, file);
  SingularPoint pt = point == "inf" ? SingularPoint::infinity()
                                    : SingularPoint::finite(parse_scalar(point));
  IndicialResult r = indicial(op, pt);
  if (as_json) {
    json j;
    j["point"] = point;
    j["regular"] = r.regular;
    if (r.poly) j["indicial_poly"] = render(*r.poly);
    if (r.exponents_exact) {
      json e = json::array();
      for (const auto& z : *r.exponents_exact) e.push_back(render(z));
      j["exponents_exact"] = e;
    }
    json num = json::array();
    for (auto z : r.exponents_numeric) num.push_back(json::array({z.real(), z.imag()}));
    j["exponents_numeric"] = num;
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << "point: " << point << "\n";
  std::cout << "regular: " << (r.regular ? "yes" : "no") << "\n";
  if (r.poly) std::cout << "indicial polynomial: " << render(*r.poly) << "\n";
  if (r.exponents_exact) {
    std::cout << "exponents:";
    for (const auto& z : *r.exponents_exact) std::cout << " " << render(z);
    std::cout << "\n";
  } else if (!r.exponents_numeric.empty()) {
    std::cout << "exponents (numeric):";
    for (auto z : r.exponents_numeric) std::cout << " " << z.real() << "+" << z.imag() << "i";
    std::cout << "\n";
  }
  return 0;
}

int run_degree_bound(const std::string& a0, const std::string& a1, int n, bool as_json) {
  SecondOrderSeed seed{parse_rational_function(a0), parse_rational_function(a1)};
  long bound = degree_bound(seed, n);
  if (as_json)
    std::cout << json{{"n", n}, {"bound", bound}}.dump() << "\n";
  else
    std::cout << bound << "\n";
  return 0;
}

int run_beta_ode(const std::string& a, const std::string& b, int n, bool as_json) {
  Rational ra = parse_scalar(a).re(), rb = parse_scalar(b).re();
  DensityODE ode = beta_density_ode(BetaParams(ra, rb, n));
  print_operator(ode.as_diff_operator(), as_json);
  return 0;
}

int run_irwin_hall(int n, bool as_json) {
  PiecewisePolyDensity d = irwin_hall_density(n);
  if (as_json) {
    std::cout << d.to_json_text() << "\n";
    return 0;
  }
  std::cout << "c:";
  for (const auto& c : d.c) std::cout << " " << c.str();
  std::cout << "\n";
  for (int k = 0; k < n; ++k) {
    RealPoly p = d.piece(k);
    Poly shown;  // render via the complex-coefficient printer
    for (int j = 0; j <= p.degree(); ++j)
      shown += Poly::monomial(GaussianRational(p.coeff(j)), j);
    std::cout << "[" << k << ", " << k + 1 << "]: " << render(shown) << "\n";
  }
  return 0;
}

int run_cube_ode(int n, bool as_json) {
  DensityODE ode = cube_density_ode(n);
  print_operator(ode.as_diff_operator(), as_json);
  return 0;
}

int run_cube_density(int n, double x0, const std::string& grid, double T, int m,
                     std::size_t mc_samples, std::uint64_t seed, bool as_json) {
  DensityODE ode = cube_density_ode(n);
  InitialValueJob job = default_initial_value_job(n, x0);
  if (T > 0) job.T = T;
  if (m > 0) job.m = m;  // validated against k_max < m + n/3 downstream
  std::vector<double> stack = initial_values(job);

  GridSpec g = parse_grid(grid);
  std::vector<double> xs;
  for (double x = g.lo; x <= g.hi + 1e-12; x += g.step) xs.push_back(x);

  const int r = 3 * n;
  Eigen::VectorXcd y0(r);
  for (int k = 0; k < r; ++k) y0(k) = stack[static_cast<std::size_t>(k)];
  IVPSolution sol = ivp_solve(ode.as_diff_operator(), x0, y0, xs);

  MonteCarloDensity mc;
  if (mc_samples > 0) mc = monte_carlo_density(n, sol.grid, mc_samples, seed);

  if (as_json) {
    json rows = json::array();
    for (std::size_t idx = 0; idx < sol.grid.size(); ++idx) {
      json row;
      row["x"] = sol.grid[idx];
      row["f"] = sol.values[idx](0).real();
      if (mc_samples > 0) {
        row["mc"] = mc.estimate[idx];
        row["mc_stderr"] = mc.standard_error[idx];
      } else {
        row["residual"] = sol.stats.max_residual;
      }
      rows.push_back(row);
    }
    std::cout << json{{"n", n}, {"x0", x0}, {"rows", rows}}.dump() << "\n";
    return 0;
  }
  std::cout << "x,f,stderr_or_residual\n";
  std::cout.precision(12);
  for (std::size_t idx = 0; idx < sol.grid.size(); ++idx) {
    double third = mc_samples > 0 ? mc.standard_error[idx] : sol.stats.max_residual;
    std::cout << sol.grid[idx] << "," << sol.values[idx](0).real() << "," << third << "\n";
  }
  return 0;
}

int run_verify(const std::string& only, bool as_json) {
  auto outcomes = run_reference_checks(only);
  bool all_pass = true;
  if (as_json) {
    json arr = json::array();
    for (const auto& o : outcomes) {
      arr.push_back(json{{"name", o.name},
                         {"pass", o.pass},
                         {"seconds", o.seconds},
                         {"detail", o.detail}});
      all_pass = all_pass && o.pass;
    }
    std::cout << arr.dump() << "\n";
  } else {
    for (const auto& o : outcomes) {
      std::printf("%-22s %s  %8.3fs%s%s\n", o.name.c_str(), o.pass ? "PASS" : "FAIL", o.seconds,
                  o.detail.empty() ? "" : "  ", o.detail.c_str());
      all_pass = all_pass && o.pass;
    }
  }
  if (outcomes.empty()) {
    std::cerr << "no checks match '" << only << "'\n";
    return 1;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact power-equation engine for second-order holonomic seeds"};
  app.require_subcommand(1);

  std::string a0, a1, op_text, op_file, point = "0", grid = "0.5:4:0.05", only, a_str, b_str;
  int n = 1, m = 0;
  double x0 = 1.0, T = 0;
  std::size_t mc_samples = 0;
  std::uint64_t seed = 12345;
  bool as_json = false;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "machine-readable output"); };

  auto* power = app.add_subcommand("power-ode", "operator annihilating f^n from a second-order seed");
  power->add_option("--a0", a0, "coefficient a0(x)")->required();
  power->add_option("--a1", a1, "coefficient a1(x)")->required();
  power->add_option("--n", n, "power")->required();
  add_json(power);

  auto* four = app.add_subcommand("fourier", "Fourier transform of an operator");
  four->add_option("--op", op_text, "operator text, e.g. (x^2)*Dx^2 + (1)");
  four->add_option("--in", op_file, "operator JSON file");
  add_json(four);

  auto* expo = app.add_subcommand("exponents", "indicial polynomial and exponents at a point");
  expo->add_option("--op", op_text, "operator text");
  expo->add_option("--in", op_file, "operator JSON file");
  expo->add_option("--point", point, "finite scalar or 'inf'");
  add_json(expo);

  auto* deg = app.add_subcommand("degree-bound", "degree bound for the power-equation coefficients");
  deg->add_option("--a0", a0)->required();
  deg->add_option("--a1", a1)->required();
  deg->add_option("--n", n)->required();
  add_json(deg);

  auto* beta = app.add_subcommand("beta-ode", "density operator for a sum of beta variables");
  beta->add_option("--a", a_str)->required();
  beta->add_option("--b", b_str)->required();
  beta->add_option("--n", n)->required();
  add_json(beta);

  auto* ih = app.add_subcommand("irwin-hall", "exact density of a sum of uniform(0,1) variables");
  ih->add_option("--n", n)->required();
  add_json(ih);

  auto* cube = app.add_subcommand("cube-ode", "density operator for a sum of cubed normals");
  cube->add_option("--n", n)->required();
  add_json(cube);

  auto* cd = app.add_subcommand("cube-density", "numeric density of a sum of cubed normals");
  cd->add_option("--n", n)->required();
  cd->add_option("--x0", x0, "initial point (nonzero)");
  cd->add_option("--grid", grid, "evaluation grid lo:hi:step");
  cd->add_option("--T", T, "inversion split point");
  cd->add_option("--m", m, "boundary expansion depth");
  cd->add_option("--mc-check", mc_samples, "Monte Carlo overlay sample count");
  cd->add_option("--seed", seed, "Monte Carlo seed");
  add_json(cd);

  auto* ver = app.add_subcommand("verify-paper", "run the built-in reference fixture checks");
  ver->add_option("--only", only, "substring filter on check names");
  add_json(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (power->parsed()) return run_power_ode(a0, a1, n, as_json);
    if (four->parsed()) return run_fourier(op_text, op_file, as_json);
    if (expo->parsed()) return run_exponents(op_text, op_file, point, as_json);
    if (deg->parsed()) return run_degree_bound(a0, a1, n, as_json);
    if (beta->parsed()) return run_beta_ode(a_str, b_str, n, as_json);
    if (ih->parsed()) return run_irwin_hall(n, as_json);
    if (cube->parsed()) return run_cube_ode(n, as_json);
    if (cd->parsed()) return run_cube_density(n, x0, grid, T, m, mc_samples, seed, as_json);
    if (ver->parsed()) return run_verify(only, as_json);
  } catch (const Error& e) {
    if (as_json)
      std::cerr << nlohmann::json{{"error", e.what()}}.dump() << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
