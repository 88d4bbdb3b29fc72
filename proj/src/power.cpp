#include "holopow/power.hpp"

#include <algorithm>
#include <sstream>

#include "holopow/config.hpp"
#include "holopow/text.hpp"

namespace holopow {

QMatrix build_q(const SecondOrderSeed& seed, int n) {
  if (n < 1) throw DomainError("power n must be >= 1");
  if (n > power_n_cap())
    throw DomainError("power n exceeds the configured cap (HOLOPOW_MAX_N)");
  QMatrix out;
  out.n = n;
  out.q = RatFunMatrix::Constant(n + 1, n + 2, RatFun(0));
  out.q(0, 0) = RatFun(1);
  auto at = [&](int i, int j) -> RatFun {
    if (i < 0 || i > n) return RatFun(0);
    return out.q(i, j);
  };
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      RatFun v = GaussianRational(n + 1 - i) * at(i - 1, j) + at(i, j).derivative() +
                 GaussianRational(i) * seed.a1 * at(i, j) +
                 GaussianRational(i + 1) * seed.a0 * at(i + 1, j);
      out.q(i, j + 1) = v;
    }
  }
  return out;
}

std::string qmatrix_dump(const QMatrix& q) {
  std::ostringstream os;
  for (int i = 0; i <= q.n; ++i) {
    for (int j = 0; j <= q.n + 1; ++j) {
      if (j) os << " | ";
      os << render(q.q(i, j));
    }
    os << "\n";
  }
  return os.str();
}

std::vector<RatFun> kernel_vector(const QMatrix& q) {
  const int n = q.n;
  std::vector<RatFun> v(static_cast<std::size_t>(n) + 2, RatFun(0));
  v[static_cast<std::size_t>(n) + 1] = RatFun(1);
  for (int i = n; i >= 0; --i) {
    RatFun acc(0);
    for (int j = i + 1; j <= n + 1; ++j) acc += q.q(i, j) * v[static_cast<std::size_t>(j)];
    v[static_cast<std::size_t>(i)] = -acc / q.q(i, i);
  }
  return v;
}

PowerODE power_operator(const SecondOrderSeed& seed, int n) {
  QMatrix q = build_q(seed, n);
  std::vector<RatFun> v = kernel_vector(q);

  Poly den{GaussianRational(1)};
  for (const RatFun& c : v) den = lcm(den, c.den());
  std::vector<Poly> polys;
  polys.reserve(v.size());
  for (const RatFun& c : v) polys.push_back(c.num() * den.divmod(c.den()).first);

  // kernel vectors are defined up to rational-function multiples, so common
  // polynomial factors are spurious; strip them before scalar normalization
  Poly g;
  for (const Poly& p : polys) g = gcd(g, p);
  if (g.degree() > 0)
    for (Poly& p : polys) p = p.divmod(g).first;
  polys = canonicalize_coeff_polys(std::move(polys));

  PowerODE out;
  out.n = n;
  out.kernel = polys;
  out.seed = seed;
  std::vector<RatFun> coeffs(polys.begin(), polys.end());
  out.op = DiffOperator(std::move(coeffs));
  return out;
}

namespace {

LaurentBounds laurent_bounds_of(const RatFun& f, const char* which) {
  auto l = f.to_laurent();
  if (!l) throw HypothesisError(std::string(which) + " is a Laurent polynomial");
  return l->bounds();
}

}  // namespace

long maxdeg_bound_formula(const LaurentBounds& a0, const LaurentBounds& a1, int n) {
  // sentinel-safe arithmetic: maxdeg of 0 drops out of max{}, mindeg of 0
  // drops out of min{}
  long hi = 0;
  if (a0.maxdeg != kMaxdegZero && a1.maxdeg != kMaxdegZero)
    hi = std::max(hi, static_cast<long>(a0.maxdeg) + static_cast<long>(n - 1) * a1.maxdeg);
  if (a1.maxdeg != kMaxdegZero) hi = std::max(hi, static_cast<long>(n) * a1.maxdeg);

  long lo;
  if (a0.mindeg == kMindegZero && a1.mindeg == kMindegZero)
    throw DomainError("degree bound of the zero seed");
  if (a0.mindeg == kMindegZero)
    lo = a1.mindeg;
  else if (a1.mindeg == kMindegZero)
    lo = a0.mindeg;
  else
    lo = std::min(a0.mindeg, a1.mindeg);

  long tail = a1.mindeg == kMindegZero ? 0 : static_cast<long>(n - 1) * a1.mindeg;
  return hi - lo - tail;
}

long degree_bound(const SecondOrderSeed& seed, int n) {
  LaurentBounds b0 = laurent_bounds_of(seed.a0, "a0");
  LaurentBounds b1 = laurent_bounds_of(seed.a1, "a1");
  if (!(b1.mindeg <= -1)) throw HypothesisError("m1 <= -1");
  if (!(b1.maxdeg >= -1)) throw HypothesisError("M1 >= -1");
  if (!(b0.mindeg == kMindegZero || b0.mindeg >= 2L * b1.mindeg))
    throw HypothesisError("m0 >= 2*m1");
  if (!(b0.maxdeg == kMaxdegZero || b0.maxdeg <= 2L * b1.maxdeg))
    throw HypothesisError("M0 <= 2*M1");
  return maxdeg_bound_formula(b0, b1, n);
}

ExponentPrediction predicted_exponents(const GaussianRational& l1, const GaussianRational& l2,
                                       int n) {
  ExponentPrediction out;
  out.lambda1 = l1;
  out.lambda2 = l2;
  out.n = n;
  out.values.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    out.values.push_back(GaussianRational(n - k) * l1 + GaussianRational(k) * l2);
  return out;
}

GRatMatrix eig_matrix(const GaussianRational& l1, const GaussianRational& l2, int n) {
  GRatMatrix m = GRatMatrix::Constant(n + 1, n + 1, GaussianRational(0));
  GaussianRational sum = l1 + l2, prod = l1 * l2;
  for (int k = 0; k <= n; ++k) m(k, k) = GaussianRational(k) * sum;
  for (int k = 0; k < n; ++k) {
    m(k + 1, k) = GaussianRational(n - k);
    m(k, k + 1) = -GaussianRational(k + 1) * prod;
  }
  return m;
}

GRatMatrix eig_matrix_scaled(int n, const GaussianRational& z) {
  GRatMatrix m = GRatMatrix::Constant(n + 1, n + 1, GaussianRational(0));
  GaussianRational onez = GaussianRational(1) + z;
  for (int k = 0; k <= n; ++k) m(k, k) = GaussianRational(k) * onez;
  for (int k = 0; k < n; ++k) {
    m(k + 1, k) = -GaussianRational(n - k) * z;
    m(k, k + 1) = GaussianRational(k + 1);
  }
  return m;
}

Poly char_poly_tridiag(const GRatMatrix& m) {
  // D_{-1} = 1, D_0 = lambda - d_0, D_k = (lambda - d_k) D_{k-1} - s_k u_k D_{k-2}
  const int n = static_cast<int>(m.rows());
  const Poly lambda = Poly::x();
  Poly dm2{GaussianRational(1)};
  Poly dm1 = lambda - Poly(m(0, 0));
  for (int k = 1; k < n; ++k) {
    Poly cur = (lambda - Poly(m(k, k))) * dm1 - Poly(m(k, k - 1) * m(k - 1, k)) * dm2;
    dm2 = std::move(dm1);
    dm1 = std::move(cur);
  }
  return dm1;
}

GRatVector eig_vector(int n, int k, const GaussianRational& z) {
  if (k < 0 || k > n) throw DomainError("eig_vector index out of range");
  GRatVector v = GRatVector::Constant(n + 1, GaussianRational(0));
  if (z == GaussianRational(1)) {
    for (int l = 0; l <= n - k; ++l) v(l) = GaussianRational(Rational(binomial(n - k, l)));
    return v;
  }
  for (int l = 0; l <= n; ++l) {
    GaussianRational acc(0);
    int jlo = std::max(0, k + l - n), jhi = std::min(k, l);
    for (int j = jlo; j <= jhi; ++j) {
      Int w = binomial(n - k, l - j) * binomial(k, j);
      acc += GaussianRational(Rational(w)) * z.pow(j);
    }
    v(l) = acc;
  }
  return v;
}

GaussianRational hypergeom_2f1_terminating(int a, int b, const GaussianRational& c,
                                           const GaussianRational& z) {
  if (a > 0) throw DomainError("2F1: upper parameter a must be a nonpositive integer");
  GaussianRational sum(1), term(1);
  for (int m = 0; a + m != 0; ++m) {
    GaussianRational lower = c + GaussianRational(m);
    GaussianRational upper = GaussianRational(a + m) * GaussianRational(b + m);
    if (upper.is_zero()) break;  // series also terminates through b
    if (lower.is_zero())
      throw UndefinedParameterError("2F1 lower parameter hits a nonpositive integer");
    term *= upper * z / (lower * GaussianRational(m + 1));
    sum += term;
  }
  return sum;
}

bool check_2f1_recursion(int k, int l, int n, const GaussianRational& z) {
  GaussianRational c(n - k - l + 1);
  GaussianRational lhs =
      c * (c - GaussianRational(1)) *
          hypergeom_2f1_terminating(-k, -l - 1, c - GaussianRational(1), z) -
      c * (c - GaussianRational(1) + GaussianRational(k - l) * z) *
          hypergeom_2f1_terminating(-k, -l, c, z) -
      GaussianRational(l) * (c + GaussianRational(k)) * z *
          hypergeom_2f1_terminating(-k, -l + 1, c + GaussianRational(1), z);
  return lhs.is_zero();
}

}  // namespace holopow
