#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "holopow/indicial.hpp"
#include "holopow/phi.hpp"
#include "holopow/stats.hpp"
#include "holopow/text.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace holopow;
using holopow::testing::Rng;

namespace {
GaussianRational g(int num, int den = 1) { return GaussianRational(Rational(num, den)); }
}  // namespace

TEST_CASE("beta seed coefficients and bounds") {
  Rational a(1), b(1);
  SecondOrderSeed s = beta_char_seed(a, b);
  CHECK(s.a1 == parse_rational_function("i - 2*x^-1"));
  CHECK(s.a0 == parse_rational_function("i*x^-1"));
  CHECK(s.a0.to_laurent()->bounds() == LaurentBounds{-1, -1});
  CHECK(s.a1.to_laurent()->bounds() == LaurentBounds{-1, 0});
  CHECK_THROWS_AS(beta_char_seed(Rational(0), Rational(1)), DomainError);
  CHECK_THROWS_AS(beta_char_seed(Rational(1), Rational(-2)), DomainError);
}

TEST_CASE("cube seed coefficients, bounds, residual") {
  SecondOrderSeed s = cube_char_seed();
  CHECK(s.a1 == parse_rational_function("-3*x^-1 - 1/27*x^-3"));
  CHECK(s.a0 == parse_rational_function("-5/9*x^-2"));
  CHECK(s.a0.to_laurent()->bounds() == LaurentBounds{-2, -2});
  CHECK(s.a1.to_laurent()->bounds() == LaurentBounds{-3, -1});

  // quadrature-evaluated (phi, phi', phi'') satisfies the seed equation
  PhiDerivs d = phi_quadrature_derivs(1.5);
  std::complex<double> r =
      residual_eval(s.as_operator(), 1.5, {d.phi, d.dphi, d.d2phi});
  CHECK(std::abs(r) < 1e-8);
}

TEST_CASE("beta density operator matches the printed order-3 table") {
  for (auto [a, b] : {std::pair<Rational, Rational>{Rational(1), Rational(1)},
                      {Rational(2), Rational(3)},
                      {Rational(1, 2), Rational(5, 2)},
                      {Rational(3), Rational(3)}}) {
    DensityODE ode = beta_density_ode(BetaParams(a, b, 3));
    CHECK(ode.order() == 3);
    CHECK(equal_up_to_scalar(ode.as_diff_operator(), fixture_f3(a, b)));
  }
}

TEST_CASE("f3 fixture collapses at a = b = 1") {
  DiffOperator f3 = fixture_f3(Rational(1), Rational(1));
  CHECK(f3.coeff(2).is_zero());
  CHECK(f3.coeff(1).is_zero());
  CHECK(f3.coeff(0).is_zero());
  CHECK(f3.coeff(3) == RatFun(from_roots<GaussianRational>({g(0), g(1), g(2), g(3)})));
}

TEST_CASE("beta density operator order and singular points") {
  Rng rng(301);
  for (int n = 1; n <= 8; ++n) {
    for (int t = 0; t < 3; ++t) {
      Rational a = Rational(rng.uniform(1, 9), rng.uniform(1, 4));
      Rational b = Rational(rng.uniform(1, 9), rng.uniform(1, 4));
      DensityODE ode = beta_density_ode(BetaParams(a, b, n));
      CHECK(ode.order() == n);
      DiffOperator op = ode.as_diff_operator();
      // real coefficients after canonicalization
      for (const RatFun& c : op.coeffs())
        for (const GaussianRational& z : c.num().coeffs()) CHECK(z.is_real());
      // leading coefficient divisible by x(x-1)...(x-n)
      std::vector<GaussianRational> roots;
      for (int k = 0; k <= n; ++k) roots.push_back(g(k));
      auto [quot, rem] = op.coeff(n).num().divmod(from_roots(roots));
      CHECK(rem.is_zero());
      CHECK(quot.degree() == 0);
    }
  }
}

TEST_CASE("uniform case collapses to the pure product operator") {
  for (int n = 1; n <= 5; ++n) {
    DensityODE ode = beta_density_ode(BetaParams(Rational(1), Rational(1), n));
    std::vector<GaussianRational> roots;
    for (int k = 0; k <= n; ++k) roots.push_back(g(k));
    std::vector<RatFun> coeffs(static_cast<std::size_t>(n) + 1, RatFun(0));
    coeffs.back() = RatFun(from_roots(roots));
    CHECK(equal_up_to_scalar(ode.as_diff_operator(), DiffOperator(coeffs)));
  }
}

TEST_CASE("initial terms of the beta recursion rows") {
  // ini q_{1,j} = (-1)^(j-1) n (a+b)_{j-1} t^-(j-1); the row-0 constant is
  // i (-1)^j n a (a+b+1)_{j-2} t^-(j-1) (the induction base q_{0,2} = i a n/t
  // forces the (a+b+1) offset)
  Rng rng(302);
  for (int t = 0; t < 10; ++t) {
    Rational a = Rational(rng.uniform(1, 7), rng.uniform(1, 3));
    Rational b = Rational(rng.uniform(1, 7), rng.uniform(1, 3));
    int n = rng.uniform(2, 6);
    QMatrix q = build_q(beta_char_seed(a, b), n);
    GaussianRational sum{a + b};
    for (int j = 2; j <= n + 1; ++j) {
      auto [c1, e1] = q.q(1, j).to_laurent()->ini();
      CHECK(e1 == -(j - 1));
      GaussianRational want1 =
          GaussianRational((j - 1) % 2 == 0 ? 1 : -1) * GaussianRational(n) *
          rising_factorial(sum, j - 1);
      CHECK(c1 == want1);

      auto [c0, e0] = q.q(0, j).to_laurent()->ini();
      CHECK(e0 == -(j - 1));
      GaussianRational want0 = GaussianRational::i() *
                               GaussianRational(j % 2 == 0 ? 1 : -1) * GaussianRational(n) *
                               GaussianRational(a) *
                               rising_factorial(sum + g(1), j - 2);
      CHECK(c0 == want0);
    }
  }
}

TEST_CASE("initial terms of the cube recursion rows") {
  // ini q_{0,j} = (-1)^(j-1) 5n (3t)^(-3(j-1)+1), ini q_{1,j} = (-1)^(j-1) n (3t)^(-3(j-1))
  for (int n = 2; n <= 5; ++n) {
    QMatrix q = build_q(cube_char_seed(), n);
    for (int j = 2; j <= n + 1; ++j) {
      auto [c0, e0] = q.q(0, j).to_laurent()->ini();
      int p0 = -3 * (j - 1) + 1;
      CHECK(e0 == p0);
      CHECK(c0 == GaussianRational((j - 1) % 2 == 0 ? 1 : -1) * g(5 * n) *
                      GaussianRational(Rational(3).pow(p0)));
      auto [c1, e1] = q.q(1, j).to_laurent()->ini();
      int p1 = -3 * (j - 1);
      CHECK(e1 == p1);
      CHECK(c1 == GaussianRational((j - 1) % 2 == 0 ? 1 : -1) * g(n) *
                      GaussianRational(Rational(3).pow(p1)));
    }
  }
}

TEST_CASE("cube density operator order and the printed order-12 operator") {
  for (int n = 1; n <= 5; ++n) CHECK(cube_density_ode(n).order() == 3 * n);
  CHECK(equal_up_to_scalar(cube_density_ode(4).as_diff_operator(), fixture_f4()));
}

TEST_CASE("cube density operator annihilates the closed form at n = 1") {
  DiffOperator op = cube_density_ode(1).as_diff_operator();
  for (int s = 1; s <= 10; ++s) {
    double x = (s <= 5 ? 1 : -1) * (0.4 + 0.37 * (s % 5));
    auto j = holopow::testing::cube_density_closed_form(x);
    std::complex<double> r = residual_eval(op, x, {j.g, j.g1, j.g2, j.g3});
    double scale = std::max({std::abs(j.g), std::abs(j.g1), std::abs(j.g2), std::abs(j.g3)});
    CHECK(std::abs(r) < 1e-8 * scale);
  }
}

TEST_CASE("cube density exponent ladder at the origin") {
  for (int n = 1; n <= 3; ++n) {
    IndicialResult r =
        indicial(cube_density_ode(n).as_diff_operator(), SingularPoint::finite(g(0)));
    REQUIRE(r.regular);
    CHECK(r.poly->degree() == 3 * n);
    for (int k = 0; k <= n; ++k)
      CHECK(exponent_check(r, GaussianRational(Rational(n + 4 * k, 3) - Rational(1))));
    for (int j = 0; j <= 2 * n - 2; ++j) CHECK(exponent_check(r, g(j)));
  }
}

TEST_CASE("irwin-hall coefficients match the exact convolution oracle") {
  // closed form c_j = (-1)^j C(n, j)/(n-1)! spot checks
  PiecewisePolyDensity d2 = irwin_hall_density(2);
  CHECK(d2.c == std::vector<Rational>{Rational(1), Rational(-2)});
  CHECK(d2.piece(0) == RealPoly(std::vector<Rational>{Rational(0), Rational(1)}));
  CHECK(d2.piece(1) == RealPoly(std::vector<Rational>{Rational(2), Rational(-1)}));

  PiecewisePolyDensity d3 = irwin_hall_density(3);
  CHECK(d3.c == std::vector<Rational>{Rational(1, 2), Rational(-3, 2), Rational(3, 2)});

  for (int n = 2; n <= 8; ++n) {
    PiecewisePolyDensity d = irwin_hall_density(n);
    auto oracle = holopow::testing::convolved_uniform_density(n);
    REQUIRE(static_cast<int>(oracle.size()) == n);
    for (int k = 0; k < n; ++k) CHECK(d.piece(k) == oracle[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("irwin-hall smoothness, unit mass, and annihilation") {
  for (int n = 2; n <= 8; ++n) {
    PiecewisePolyDensity d = irwin_hall_density(n);
    // derivatives match at breakpoints up to order n-2; value 0 at both ends
    for (int k = 1; k < n; ++k) {
      RealPoly left = d.piece(k - 1), right = d.piece(k);
      for (int order = 0; order <= n - 2; ++order) {
        CHECK(left.eval(Rational(k)) == right.eval(Rational(k)));
        left = left.derivative();
        right = right.derivative();
      }
    }
    CHECK(d.piece(0).eval(Rational(0)) == Rational(0));
    CHECK(d.piece(n - 1).eval(Rational(n)) == Rational(0));

    // total mass: sum of piece antiderivative increments
    Rational mass(0);
    for (int k = 0; k < n; ++k) {
      RealPoly p = d.piece(k);
      std::vector<Rational> anti(static_cast<std::size_t>(p.degree()) + 2, Rational(0));
      for (int j = 0; j <= p.degree(); ++j)
        anti[static_cast<std::size_t>(j) + 1] = p.coeff(j) / Rational(j + 1);
      RealPoly ap{std::move(anti)};
      mass += ap.eval(Rational(k + 1)) - ap.eval(Rational(k));
    }
    CHECK(mass == Rational(1));

    // x(x-1)...(x-n) Dx^n kills each piece identically (degree n-1)
    for (int k = 0; k < n; ++k) {
      RealPoly p = d.piece(k);
      for (int j = 0; j < n; ++j) p = p.derivative();
      CHECK(p.is_zero());
    }
  }
}

TEST_CASE("piecewise density is nonnegative on its support") {
  for (int n = 2; n <= 8; ++n) {
    PiecewisePolyDensity d = irwin_hall_density(n);
    for (double x = 0; x <= n + 1e-9; x += n / 200.0) CHECK(d.eval(x) >= -1e-15);
  }
}

TEST_CASE("piecewise density serialization and evaluation") {
  PiecewisePolyDensity d = irwin_hall_density(2);
  CHECK(d.to_json_text() == "{\"n\": 2, \"c\": [[1, 1], [-2, 1]]}");
  CHECK(d.eval(Rational(1, 2)) == Rational(1, 2));
  CHECK(d.eval(Rational(3, 2)) == Rational(1, 2));
  CHECK(d.eval(Rational(5)) == Rational(0));
  CHECK(d.eval(1.5) == doctest::Approx(0.5));
}

TEST_CASE("fixture lookup by name") {
  CHECK(paper_fixture("ex_qx").ex_qx.has_value());
  CHECK(paper_fixture("f4").op.has_value());
  PaperFixture f3 = paper_fixture("f3");
  REQUIRE(f3.parametric != nullptr);
  CHECK(equal_up_to_scalar(f3.parametric(Rational(2), Rational(3)), fixture_f3(Rational(2), Rational(3))));
  CHECK_THROWS_AS(paper_fixture("nope"), DomainError);

  // spot values: f4 constant coefficient is 8x, ex_qx kernel head entry
  DiffOperator f4 = fixture_f4();
  CHECK(f4.coeff(0) == RatFun(Poly::monomial(g(8), 1)));
  CHECK(fixture_ex_qx().kernel[0] == parse_rational_function("9 + 6*x^-2 + 9*x^-4"));
}
