#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "holopow/indicial.hpp"
#include "holopow/stats.hpp"
#include "holopow/text.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace holopow;
using holopow::testing::Rng;

namespace {
GaussianRational g(int num, int den = 1) { return GaussianRational(Rational(num, den)); }
const WeylElement X = WeylElement::x();
const WeylElement D = WeylElement::dx();
WeylElement one() { return WeylElement(g(1)); }
}  // namespace

TEST_CASE("normal-form product examples") {
  CHECK(D * X == X * D + one());
  CHECK(X * X == WeylElement::term(g(1), 2, 0));
  CHECK(D * D * X == X * D * D + g(2) * D);
}

TEST_CASE("product is associative and the commutator is 1") {
  Rng rng(101);
  for (int t = 0; t < 250; ++t) {
    WeylElement u = rng.weyl(), v = rng.weyl(), w = rng.weyl();
    CHECK((u * v) * w == u * (v * w));
  }
  CHECK(D * X - X * D == one());
}

TEST_CASE("fourier generator images") {
  CHECK(fourier(X) == GaussianRational::i() * D);
  CHECK(fourier(D) == GaussianRational::i() * X);
  // F(x Dx + 1) = -x Dx
  WeylElement w = X * D + one();
  CHECK(fourier(w) == -(X * D));
}

TEST_CASE("fourier is a ring homomorphism") {
  Rng rng(102);
  for (int t = 0; t < 250; ++t) {
    WeylElement u = rng.weyl(6, 5), v = rng.weyl(6, 5);
    CHECK(fourier(u * v) == fourier(u) * fourier(v));
    CHECK(fourier(u + v) == fourier(u) + fourier(v));
  }
}

TEST_CASE("fourier squared negates the generators") {
  Rng rng(103);
  for (int t = 0; t < 250; ++t) {
    WeylElement w = rng.weyl(6, 5);
    CHECK(fourier(fourier(w)) == w.negate_generators());
  }
}

TEST_CASE("fourier preserves the top total degree") {
  Rng rng(104);
  for (int t = 0; t < 200; ++t) {
    WeylElement w = rng.weyl(6, 4);
    if (w.is_zero()) continue;
    CHECK(fourier(w).total_degree() == w.total_degree());
  }
}

TEST_CASE("uniform-sum operator transports to an annihilator of the characteristic power") {
  // x(x-1)(x-2)(x-3) Dx^3 annihilates the n=3 uniform-sum density; the
  // density->characteristic direction is the inverse transform, i.e. F
  // followed by the sign substitution, and the image annihilates
  // ((e^{it}-1)/(it))^3
  std::vector<GaussianRational> roots = {g(0), g(1), g(2), g(3)};
  DiffOperator op(std::vector<RatFun>{RatFun(0), RatFun(0), RatFun(0), RatFun(from_roots(roots))});
  DiffOperator hat = to_diff_operator(fourier(to_weyl(op)).negate_generators());
  for (int s = 1; s <= 20; ++s) {
    double t0 = 0.37 * s - 4.1;
    if (std::abs(t0) < 0.05) continue;
    auto stack = holopow::testing::uniform_char_power_stack(3, t0, 9);
    std::complex<double> r = residual_eval(hat, t0, stack);
    double scale = 0;
    for (auto& v : stack) scale = std::max(scale, std::abs(v));
    CHECK(std::abs(r) < 1e-9 * std::max(1.0, scale));
  }
}

TEST_CASE("theta form fixtures") {
  CHECK(to_theta_form(operator_from_text("(x^2)*Dx^2")).at(0) ==
        falling_factorial_poly<GaussianRational>(2));

  ThetaForm phi1 = to_theta_form(operator_from_text("(27*x^3)*Dx^2 + (81*x^2+1)*Dx + (15*x)"));
  Poly expect1 = g(3) * (Poly(std::vector<GaussianRational>{g(1), g(3)}) *
                         Poly(std::vector<GaussianRational>{g(5), g(3)}));
  CHECK(phi1.terms().size() == 2);
  CHECK(phi1.at(1) == expect1);
  CHECK(phi1.at(-1) == Poly::x());

  // Dt^2 - (i - (a+b)/t) Dt - i a/t  ->  t^-2 th(th-1+a+b) - i t^-1 (th+a)
  Rational a(2), b(3);
  ThetaForm beta = to_theta_form(beta_char_seed(a, b).as_operator());
  Poly th = Poly::x();
  CHECK(beta.at(-2) == th * (th + Poly(GaussianRational(a + b - Rational(1)))));
  CHECK(beta.at(-1) == -GaussianRational::i() * (th + Poly(GaussianRational(a))));
}

TEST_CASE("theta form round trip") {
  Rng rng(105);
  for (int t = 0; t < 250; ++t) {
    WeylElement w = rng.weyl(5, 4);
    auto [back, shift] = theta_to_weyl(to_theta_form(w));
    CHECK(shift == 0);
    CHECK(back == w);
  }
  // with negative x-powers the round trip clears by a power of x
  DiffOperator op = beta_char_seed(Rational(1), Rational(2)).as_operator();
  auto [w, shift] = theta_to_weyl(to_theta_form(op));
  CHECK(shift == 1);
  std::vector<RatFun> scaled;
  for (const RatFun& c : op.coeffs()) scaled.push_back(RatFun::x() * c);
  CHECK(to_diff_operator(w) == DiffOperator(scaled));
}

TEST_CASE("canonicalization fixes scale and phase") {
  DiffOperator op = operator_from_text("(2*i*x^2 + 4*i)*Dx + (6*i*x)");
  DiffOperator canon = canonicalize(op);
  CHECK(canon == operator_from_text("(x^2 + 2)*Dx + (3*x)"));
  CHECK(equal_up_to_scalar(op, canon));
  CHECK(!equal_up_to_scalar(op, operator_from_text("(x^2 + 2)*Dx + (4*x)")));
}

TEST_CASE("indicial at finite points") {
  // Euler operator x^2 Dx^2 - x Dx: exponents {0, 2}
  DiffOperator euler = operator_from_text("(x^2)*Dx^2 + (-x)*Dx");
  IndicialResult r = indicial(euler, SingularPoint::finite(g(0)));
  CHECK(r.regular);
  CHECK(*r.poly == Poly::x() * (Poly::x() - Poly(g(2))));
  REQUIRE(r.exponents_exact.has_value());
  CHECK(*r.exponents_exact == std::vector<GaussianRational>{g(0), g(2)});
  CHECK(r.exponents_numeric.size() == 2);
  CHECK(std::abs(r.exponents_numeric[1] - std::complex<double>(2, 0)) < 1e-10);

  // beta characteristic seed at 0: exponents {0, 1-(a+b)}
  Rational a(1, 2), b(5, 2);
  IndicialResult rb = indicial(beta_char_seed(a, b).as_operator(), SingularPoint::finite(g(0)));
  CHECK(rb.regular);
  CHECK(exponent_check(rb, g(0)));
  CHECK(exponent_check(rb, GaussianRational(Rational(1) - a - b)));

  // translated point: the Euler operator shifted to x = 2
  DiffOperator shifted = operator_from_text("((x-2)^2)*Dx^2 + (-(x-2))*Dx");
  IndicialResult rs = indicial(shifted, SingularPoint::finite(g(2)));
  CHECK(rs.regular);
  CHECK(exponent_check(rs, g(0)));
  CHECK(exponent_check(rs, g(2)));
  CHECK(!exponent_check(rs, g(1)));
}

TEST_CASE("indicial at infinity") {
  IndicialResult r = indicial(cube_char_seed().as_operator(), SingularPoint::infinity());
  CHECK(r.regular);
  CHECK(exponent_check(r, GaussianRational(Rational(-1, 3))));
  CHECK(exponent_check(r, GaussianRational(Rational(-5, 3))));
  CHECK(!exponent_check(r, g(0)));
  REQUIRE(r.exponents_exact.has_value());
  CHECK(r.exponents_exact->size() == 2);
}

TEST_CASE("irregular points are flagged, zero operator rejected") {
  // x^2 Dx + 1 has an irregular singular point at 0
  DiffOperator irr = operator_from_text("(x^2)*Dx + (1)");
  IndicialResult r = indicial(irr, SingularPoint::finite(g(0)));
  CHECK(!r.regular);
  CHECK(!r.poly.has_value());
  CHECK_THROWS_AS(exponent_check(r, g(0)), DomainError);
  CHECK_THROWS_AS(indicial(DiffOperator(), SingularPoint::finite(g(0))), DomainError);
}

TEST_CASE("exact exponents pass the membership test and match numeric roots") {
  Rng rng(110);
  int seen = 0;
  for (int t = 0; t < 120 && seen < 40; ++t) {
    std::vector<RatFun> coeffs;
    int r = rng.uniform(1, 4);
    for (int k = 0; k <= r; ++k) coeffs.emplace_back(rng.poly(3, 3));
    DiffOperator op(coeffs);
    if (op.is_zero()) continue;
    for (bool at_inf : {false, true}) {
      IndicialResult res =
          indicial(op, at_inf ? SingularPoint::infinity() : SingularPoint::finite(g(0)));
      if (!res.regular || !res.exponents_exact) continue;
      ++seen;
      for (const auto& root : *res.exponents_exact) CHECK(exponent_check(res, root));
      // numeric companion roots pair off with the exact ones
      std::vector<std::complex<double>> numeric = res.exponents_numeric;
      for (const auto& root : *res.exponents_exact) {
        auto target = root.to_complex();
        double best = 1e9;
        std::size_t best_i = 0;
        for (std::size_t i = 0; i < numeric.size(); ++i) {
          double d = std::abs(numeric[i] - target);
          if (d < best) {
            best = d;
            best_i = i;
          }
        }
        CHECK(best < 1e-10);
        numeric.erase(numeric.begin() + static_cast<std::ptrdiff_t>(best_i));
      }
    }
  }
  CHECK(seen >= 20);
}

TEST_CASE("exact root extraction survives multiplicities") {
  // (x - 1/3)^2 (x + 2) (x - i)
  Poly p = Poly(std::vector<GaussianRational>{g(-1, 3), g(1)}).pow(2) *
           Poly(std::vector<GaussianRational>{g(2), g(1)}) *
           Poly(std::vector<GaussianRational>{-GaussianRational::i(), g(1)});
  auto roots = exact_roots(p);
  REQUIRE(roots.has_value());
  CHECK(roots->size() == 4);
  CHECK(std::count(roots->begin(), roots->end(), g(1, 3)) == 2);
  CHECK(std::count(roots->begin(), roots->end(), g(-2)) == 1);
  CHECK(std::count(roots->begin(), roots->end(), GaussianRational::i()) == 1);

  // irrational roots: x^2 - 2 does not split over Q(i)
  Poly q = Poly::x() * Poly::x() - Poly(g(2));
  CHECK(!exact_roots(q).has_value());
}

TEST_CASE("fourier exponent transport") {
  // {-1} -> {0} (either side, d = r)
  auto fixed = fourier_exponents({g(-1)}, 1, 1, FourierSide::kZeroToInfinity);
  CHECK(fixed == std::vector<GaussianRational>{g(0)});
  // {0, 2} with d = r -> {-1, -3}
  auto two = fourier_exponents({g(0), g(2)}, 2, 2, FourierSide::kZeroToInfinity);
  CHECK(two == std::vector<GaussianRational>{g(-1), g(-3)});
  // cube ladder for n = 2: {-2/3, -2, -10/3} at infinity (r = 3, d = 6)
  std::vector<GaussianRational> mus = {GaussianRational(Rational(-2, 3)), g(-2),
                                       GaussianRational(Rational(-10, 3))};
  auto mapped = fourier_exponents(mus, 6, 3, FourierSide::kInfinityToZero);
  std::vector<GaussianRational> want = {GaussianRational(Rational(-1, 3)), g(1),
                                        GaussianRational(Rational(7, 3)), g(0), g(1), g(2)};
  CHECK(mapped == want);
  CHECK_THROWS_AS(fourier_exponents(mus, 2, 3, FourierSide::kInfinityToZero), HypothesisError);
  CHECK_THROWS_AS(fourier_exponents(mus, 3, 2, FourierSide::kZeroToInfinity), HypothesisError);
}

TEST_CASE("residual_eval on known solutions") {
  // Dx^2 + 1 annihilates sin
  DiffOperator osc = operator_from_text("Dx^2 + (1)");
  double x = 0.3;
  CHECK(std::abs(residual_eval(osc, x, {std::sin(x), std::cos(x), -std::sin(x)})) < 1e-15);

  // Dx^3 + 4 Dx annihilates sin^2 (double-angle stack)
  DiffOperator sq = operator_from_text("Dx^3 + (4)*Dx");
  double y = 1.1;
  std::vector<std::complex<double>> stack = {std::sin(y) * std::sin(y), std::sin(2 * y),
                                             2 * std::cos(2 * y), -4 * std::sin(2 * y)};
  CHECK(std::abs(residual_eval(sq, y, stack)) < 1e-14);

  CHECK_THROWS_AS(residual_eval(sq, 0.5, {1.0}), DomainError);
  DiffOperator pole = operator_from_text("(1)/(x)*Dx");
  CHECK_THROWS_AS(residual_eval(pole, 0.0, {1.0, 1.0}), PoleError);
}

TEST_CASE("operator JSON and text are bit-exact round trips") {
  Rng rng(106);
  for (int t = 0; t < 60; ++t) {
    std::vector<RatFun> coeffs;
    int r = rng.uniform(0, 4);
    for (int k = 0; k <= r; ++k) coeffs.emplace_back(rng.poly(3));
    DiffOperator op = canonicalize(DiffOperator(coeffs));
    if (op.is_zero()) continue;
    CHECK(operator_from_json(operator_to_json(op)) == op);
    CHECK(canonicalize(operator_from_text(to_text(op))) == op);
  }
  // big coefficients take the string path
  Poly big = Poly::monomial(GaussianRational(Rational(Int("1234567890123456789012345"))), 2);
  DiffOperator bop(std::vector<RatFun>{RatFun(big)});
  CHECK(operator_from_json(operator_to_json(bop)) == canonicalize(bop));

  // text survives rational-function coefficients without canonicalizing
  Rng rfr(107);
  for (int t = 0; t < 40; ++t) {
    std::vector<RatFun> coeffs;
    int r = rfr.uniform(0, 3);
    for (int k = 0; k <= r; ++k) coeffs.push_back(rfr.rational_function(2));
    DiffOperator op(std::move(coeffs));
    CHECK(operator_from_text(to_text(op)) == op);
  }
}

TEST_CASE("operator JSON wire format is pinned") {
  // 27x^2 Dx^3 + 81x Dx^2 + 15 Dx + x, already canonical
  DiffOperator op = operator_from_text("(27*x^2)*Dx^3 + (81*x)*Dx^2 + (15)*Dx + (x)");
  nlohmann::json j = operator_to_json(op);
  nlohmann::json want = nlohmann::json::parse(R"({
    "order": 3,
    "coeffs": [
      [[0,1,0,1],[1,1,0,1]],
      [[15,1,0,1]],
      [[0,1,0,1],[81,1,0,1]],
      [[0,1,0,1],[0,1,0,1],[27,1,0,1]]
    ]
  })");
  CHECK(j == want);
}

TEST_CASE("operator text grammar accepts the documented forms") {
  DiffOperator a = operator_from_text("(x^4)*Dx^4 + (6*x^3)*Dx^3");
  CHECK(a.order() == 4);
  CHECK(a.coeff(3) == RatFun(Poly::monomial(g(6), 3)));
  DiffOperator b = operator_from_text("Dx^2 - Dx + 3");
  CHECK(b.coeff(1) == RatFun(g(-1)));
  DiffOperator c = operator_from_text("x*Dx + 1");
  CHECK(c.coeff(1) == RatFun::x());
  CHECK_THROWS_AS(operator_from_text("Dx*x"), ParseError);
}
