#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holopow/power.hpp"
#include "holopow/weyl.hpp"

namespace holopow {

struct BetaParams {
  Rational a;
  Rational b;
  int n = 1;

  BetaParams(Rational a_, Rational b_, int n_) : a(std::move(a_)), b(std::move(b_)), n(n_) {
    if (a.sign() <= 0 || b.sign() <= 0) throw DomainError("beta parameters must be positive");
    if (n < 1) throw DomainError("beta power must be >= 1");
  }
};

/// Seed equation of the Beta(a,b) characteristic function phi(t):
/// a1 = i - (a+b)/t, a0 = i a / t.
SecondOrderSeed beta_char_seed(const Rational& a, const Rational& b);

/// Seed equation of the characteristic function of a cubed standard normal:
/// a1 = -3/t - 1/(27 t^3), a0 = -5/(9 t^2).
SecondOrderSeed cube_char_seed();

/// Annihilator of a density obtained by Fourier-transforming the power
/// equation of a characteristic function.
struct DensityODE {
  int n = 0;
  WeylElement op;  // canonical polynomial-coefficient normal form
  std::string provenance;

  int order() const { return op.order(); }
  DiffOperator as_diff_operator() const { return to_diff_operator(op); }
};

/// n-th order annihilator of the density of a sum of n Beta(a,b) variables.
DensityODE beta_density_ode(const BetaParams& p);

/// 3n-th order annihilator of the density of a sum of n cubed standard
/// normals.
DensityODE cube_density_ode(int n);

/// Density of the sum of n independent uniform(0,1) variables: on [k, k+1]
/// the polynomial sum_{j<=k} c_j (x-j)^(n-1), with the c_j solved exactly
/// from the smoothness-at-n and unit-integral conditions.
struct PiecewisePolyDensity {
  int n = 0;
  std::vector<Rational> c;  // c_0 ... c_{n-1}

  /// Polynomial valid on [k, k+1], 0 <= k < n.
  RealPoly piece(int k) const;
  /// Exact value at a rational point of [0, n] (0 outside).
  Rational eval(const Rational& x) const;
  double eval(double x) const;
  std::string to_json_text() const;
};

PiecewisePolyDensity irwin_hall_density(int n);

// --- stored exact transcriptions of printed example objects ---

struct ExQxFixture {
  SecondOrderSeed seed;        // a0 = 1 + x^-2, a1 = -x^-1
  int n = 3;
  RatFunMatrix q;              // the printed 4 x 5 matrix
  std::vector<RatFun> kernel;  // (v_0, ..., v_3, 1) with Laurent entries
};

ExQxFixture fixture_ex_qx();

/// Printed order-3 beta density operator with coefficients polynomial in
/// (a, b), evaluated at the supplied rational parameter values.
DiffOperator fixture_f3(const Rational& a, const Rational& b);

/// Printed order-12 density operator of the sum of four cubed normals.
DiffOperator fixture_f4();

struct PaperFixture {
  std::string name;
  std::optional<ExQxFixture> ex_qx;                 // name == "ex_qx"
  std::optional<DiffOperator> op;                   // name == "f4"
  DiffOperator (*parametric)(const Rational&, const Rational&) = nullptr;  // name == "f3"
};

/// Lookup by name ("f3", "f4", "ex_qx"); unknown names raise DomainError.
PaperFixture paper_fixture(const std::string& name);

}  // namespace holopow
