#include "holopow/stats.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "holopow/linsolve.hpp"
#include "holopow/text.hpp"

namespace holopow {

SecondOrderSeed beta_char_seed(const Rational& a, const Rational& b) {
  if (a.sign() <= 0 || b.sign() <= 0) throw DomainError("beta parameters must be positive");
  const GaussianRational i = GaussianRational::i();
  RatFun inv_t = RatFun(1) / RatFun::x();
  SecondOrderSeed s;
  s.a1 = RatFun(i) - GaussianRational(a + b) * inv_t;
  s.a0 = GaussianRational(a) * i * inv_t;
  return s;
}

SecondOrderSeed cube_char_seed() {
  // 27 t^3 Dt^2 + (81 t^2 + 1) Dt + 15 t, divided by 27 t^3 and rearranged
  RatFun inv_t = RatFun(1) / RatFun::x();
  SecondOrderSeed s;
  s.a1 = GaussianRational(-3) * inv_t - GaussianRational(Rational(1, 27)) * inv_t.pow(3);
  s.a0 = GaussianRational(Rational(-5, 9)) * inv_t.pow(2);
  return s;
}

namespace {

DensityODE density_via_fourier(const SecondOrderSeed& seed, int n, std::string provenance) {
  PowerODE p = power_operator(seed, n);
  WeylElement hat = fourier(to_weyl(p.op));
  DiffOperator canon = canonicalize(to_diff_operator(hat));
  DensityODE out;
  out.n = n;
  out.op = to_weyl(canon);
  out.provenance = std::move(provenance);
  return out;
}

}  // namespace

DensityODE beta_density_ode(const BetaParams& p) {
  return density_via_fourier(beta_char_seed(p.a, p.b), p.n,
                             "beta(" + p.a.str() + "," + p.b.str() + ") characteristic power");
}

DensityODE cube_density_ode(int n) {
  if (n < 1) throw DomainError("cube power must be >= 1");
  return density_via_fourier(cube_char_seed(), n, "cubed-normal characteristic power");
}

// --- Irwin-Hall ---

PiecewisePolyDensity irwin_hall_density(int n) {
  if (n < 1) throw DomainError("irwin_hall_density needs n >= 1");
  PiecewisePolyDensity out;
  out.n = n;
  if (n == 1) {
    out.c = {Rational(1)};
    return out;
  }
  // rows: powers n, n-1, ..., 1 of (n-j); rhs (n, 0, ..., 0)
  GRatMatrix m(n, n);
  GRatVector rhs = GRatVector::Constant(n, GaussianRational(0));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j < n; ++j) m(r, j) = GaussianRational(Rational(n - j).pow(n - r));
  rhs(0) = GaussianRational(n);
  GRatVector c = solve_exact(m, rhs);
  out.c.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) out.c.push_back(c(j).re());
  return out;
}

RealPoly PiecewisePolyDensity::piece(int k) const {
  if (k < 0 || k >= n) throw DomainError("piece index outside [0, n)");
  RealPoly acc;
  for (int j = 0; j <= k; ++j) {
    RealPoly shifted = RealPoly(std::vector<Rational>{Rational(-j), Rational(1)}).pow(n - 1);
    acc += c[static_cast<std::size_t>(j)] * shifted;
  }
  return acc;
}

Rational PiecewisePolyDensity::eval(const Rational& x) const {
  if (x.sign() < 0 || x > Rational(n)) return Rational(0);
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  int k = std::min(n - 1, static_cast<int>(fl.get_si()));
  return piece(k).eval(x);
}

double PiecewisePolyDensity::eval(double x) const {
  if (x < 0 || x > n) return 0.0;
  int k = std::min(n - 1, static_cast<int>(std::floor(x)));
  return eval_numeric(piece(k), x);
}

std::string PiecewisePolyDensity::to_json_text() const {
  std::ostringstream os;
  os << "{\"n\": " << n << ", \"c\": [";
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j) os << ", ";
    os << "[" << c[j].num().get_str() << ", " << c[j].den().get_str() << "]";
  }
  os << "]}";
  return os.str();
}

// --- printed fixtures ---

namespace {

RatFun rf(const char* text) { return parse_rational_function(text); }

Poly poly_in_x(std::initializer_list<GaussianRational> descending) {
  std::vector<GaussianRational> asc(descending.begin(), descending.end());
  std::reverse(asc.begin(), asc.end());
  return Poly(std::move(asc));
}

}  // namespace

ExQxFixture fixture_ex_qx() {
  ExQxFixture f;
  f.seed.a0 = rf("1 + x^-2");
  f.seed.a1 = rf("-x^-1");
  f.n = 3;
  f.q = RatFunMatrix::Constant(4, 5, RatFun(0));
  f.q(0, 0) = rf("1");
  f.q(0, 2) = rf("3 + 3*x^-2");
  f.q(0, 3) = rf("-3*x^-1 - 9*x^-3");
  f.q(0, 4) = rf("21 + 51*x^-2 + 54*x^-4");
  f.q(1, 1) = rf("3");
  f.q(1, 2) = rf("-3*x^-1");
  f.q(1, 3) = rf("21 + 27*x^-2");
  f.q(1, 4) = rf("-66*x^-1 - 144*x^-3");
  f.q(2, 2) = rf("6");
  f.q(2, 3) = rf("-18*x^-1");
  f.q(2, 4) = rf("60 + 126*x^-2");
  f.q(3, 3) = rf("6");
  f.q(3, 4) = rf("-36*x^-1");
  f.kernel = {rf("9 + 6*x^-2 + 9*x^-4"), rf("-30*x^-1 - 9*x^-3"), rf("-10 - 3*x^-2"),
              rf("6*x^-1"), rf("1")};
  return f;
}

DiffOperator fixture_f3(const Rational& a, const Rational& b) {
  const GaussianRational A(a), B(b);
  const GaussianRational s = A + B;  // a + b
  auto g = [](int v) { return GaussianRational(v); };

  // Dx^3: x(x-1)(x-2)(x-3)
  Poly c3 = from_roots<GaussianRational>({g(0), g(1), g(2), g(3)});

  // Dx^2: -6(a+b-2)x^3 + 2(16a+11b-27)x^2 - 6(8a+3b-11)x + 18(a-1)
  Poly c2 = poly_in_x({g(-6) * (s - g(2)),
                       g(2) * (g(16) * A + g(11) * B - g(27)),
                       g(-6) * (g(8) * A + g(3) * B - g(11)),
                       g(18) * (A - g(1))});

  // Dx: (a+b-2)(11(a+b)-18)x^2
  //     - (48a^2 + 66ab + 18b^2 - 145a - 95b + 108)x
  //     + 3(a-1)(15a + 12b - 22)
  Poly c1 = poly_in_x({(s - g(2)) * (g(11) * s - g(18)),
                       -(g(48) * A * A + g(66) * A * B + g(18) * B * B - g(145) * A -
                         g(95) * B + g(108)),
                       g(3) * (A - g(1)) * (g(15) * A + g(12) * B - g(22))});

  // Dx^0: -(a+b-2)(2(a+b)-3)(3(a+b)-4)x + 3(a-1)(2(a+b)-3)(3(a+b)-4)
  GaussianRational common = (g(2) * s - g(3)) * (g(3) * s - g(4));
  Poly c0 = poly_in_x({-(s - g(2)) * common, g(3) * (A - g(1)) * common});

  return DiffOperator(std::vector<RatFun>{RatFun(c0), RatFun(c1), RatFun(c2), RatFun(c3)});
}

DiffOperator fixture_f4() {
  auto mono = [](long c, int k) { return Poly::monomial(GaussianRational(Rational(Int(c))), k); };
  std::vector<Poly> p(13);
  p[12] = mono(177147, 5);
  p[11] = mono(5314410, 4);
  p[10] = mono(52455195, 3);
  p[9] = mono(65610, 4) + mono(202242825, 2);
  p[8] = mono(1180980, 3) + mono(278372295, 1);
  p[7] = mono(6145470, 2) + mono(89579520, 0);
  p[6] = mono(8505, 3) + mono(9950850, 1);
  p[5] = mono(76545, 2) + mono(3408480, 0);
  p[4] = mono(155655, 1);
  p[3] = mono(450, 2) + mono(56160, 0);
  p[2] = mono(1350, 1);
  p[1] = mono(480, 0);
  p[0] = mono(8, 1);
  std::vector<RatFun> coeffs(p.begin(), p.end());
  return DiffOperator(std::move(coeffs));
}

PaperFixture paper_fixture(const std::string& name) {
  PaperFixture f;
  f.name = name;
  if (name == "ex_qx") {
    f.ex_qx = fixture_ex_qx();
  } else if (name == "f3") {
    f.parametric = [](const Rational& a, const Rational& b) { return fixture_f3(a, b); };
  } else if (name == "f4") {
    f.op = fixture_f4();
  } else {
    throw DomainError("unknown fixture name '" + name + "'");
  }
  return f;
}

}  // namespace holopow
