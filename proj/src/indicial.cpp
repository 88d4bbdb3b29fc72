#include "holopow/indicial.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "holopow/eigen_support.hpp"

namespace holopow {

namespace {

DiffOperator translate_to_origin(const DiffOperator& canon, const GaussianRational& x0) {
  if (x0.is_zero()) return canon;
  std::vector<RatFun> coeffs;
  coeffs.reserve(static_cast<std::size_t>(canon.order()) + 1);
  for (int k = 0; k <= canon.order(); ++k) coeffs.emplace_back(canon.coeff(k).num().shift(x0));
  return DiffOperator(std::move(coeffs));
}

}  // namespace

IndicialResult indicial(const DiffOperator& op, const SingularPoint& point) {
  if (op.is_zero()) throw DomainError("indicial of the zero operator");
  DiffOperator canon = canonicalize(op);
  if (!point.at_infinity) canon = translate_to_origin(canon, point.value);

  ThetaForm tf = to_theta_form(canon);
  int extreme = point.at_infinity ? tf.max_x_power() : tf.min_x_power();
  const Poly& q = tf.at(extreme);

  IndicialResult res;
  res.point = point;
  res.regular = q.degree() == canon.order();
  if (!res.regular) return res;

  res.poly = q.monic();
  if (res.poly->degree() > 0) res.exponents_numeric = companion_roots(*res.poly);
  res.exponents_exact = exact_roots(*res.poly);
  return res;
}

bool exponent_check(const IndicialResult& res, const GaussianRational& lambda) {
  if (!res.regular || !res.poly) throw DomainError("exponent_check on a non-regular point");
  return res.poly->eval(lambda).is_zero();
}

std::vector<GaussianRational> fourier_exponents(const std::vector<GaussianRational>& exps, int d,
                                                int r, FourierSide side) {
  if (side == FourierSide::kZeroToInfinity) {
    if (d > r) throw HypothesisError("d <= r (regular point at 0)");
    if (static_cast<int>(exps.size()) != d)
      throw HypothesisError("exponent list has d entries (side 0 -> infinity)");
  } else {
    if (d < r) throw HypothesisError("d >= r (regular point at infinity)");
    if (static_cast<int>(exps.size()) != r)
      throw HypothesisError("exponent list has r entries (side infinity -> 0)");
  }
  std::vector<GaussianRational> out;
  out.reserve(exps.size() + static_cast<std::size_t>(std::max(0, d - r)));
  for (const GaussianRational& mu : exps) out.push_back(-mu - GaussianRational(1));
  if (side == FourierSide::kInfinityToZero)
    for (int j = 0; j < d - r; ++j) out.emplace_back(j);
  return out;
}

namespace {

// Parlett–Reinsch style diagonal balancing in powers of 2.
void balance(Eigen::MatrixXcd& m) {
  const Eigen::Index n = m.rows();
  bool converged = false;
  for (int pass = 0; pass < 100 && !converged; ++pass) {
    converged = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double c = 0, r = 0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(m(j, i));
        r += std::abs(m(i, j));
      }
      if (c == 0 || r == 0) continue;
      double f = 1;
      double s = c + r;
      while (c < r / 2) {
        c *= 2;
        r /= 2;
        f *= 2;
      }
      while (c >= r * 2) {
        c /= 2;
        r *= 2;
        f /= 2;
      }
      if (c + r < 0.95 * s) {
        converged = false;
        m.col(i) *= f;
        m.row(i) /= f;
      }
    }
  }
}

}  // namespace

std::vector<std::complex<double>> companion_roots(const Poly& p) {
  int d = p.degree();
  if (d <= 0) throw DomainError("companion_roots needs a nonconstant polynomial");
  Poly m = p.monic();
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) c(i, d - 1) = -m.coeff(i).to_complex();
  balance(c);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(c, /*computeEigenvectors=*/false);
  std::vector<std::complex<double>> roots(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) roots[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
  std::sort(roots.begin(), roots.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

std::optional<Rational> reconstruct_rational(double v, double tol, const Int& max_den) {
  if (!std::isfinite(v)) return std::nullopt;
  // continued fraction expansion of v with convergents p/q
  Int p0 = 1, q0 = 0;  // p_{-1}/q_{-1}
  double x = v;
  Int a0 = Int(std::floor(x));
  Int p1 = a0, q1 = 1;
  for (int iter = 0; iter < 64; ++iter) {
    Rational cand(p1, q1);
    if (std::abs(cand.to_double() - v) <= tol) return cand;
    double frac = x - std::floor(x);
    if (frac < 1e-15) break;
    x = 1.0 / frac;
    if (x > 9e15) break;
    Int a = Int(std::floor(x));
    Int p2 = a * p1 + p0;
    Int q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  Rational cand(p1, q1);
  if (q1 <= max_den && std::abs(cand.to_double() - v) <= tol) return cand;
  return std::nullopt;
}

namespace {

std::optional<GaussianRational> reconstruct_gaussian(std::complex<double> z, double tol,
                                                     const Int& max_den) {
  auto re = reconstruct_rational(z.real(), tol, max_den);
  auto im = reconstruct_rational(z.imag(), tol, max_den);
  if (!re || !im) return std::nullopt;
  return GaussianRational(*re, *im);
}

// Exact synthetic division by (x - root); remainder must vanish.
Poly deflate(const Poly& p, const GaussianRational& root) {
  auto [q, r] = p.divmod(Poly(std::vector<GaussianRational>{-root, GaussianRational(1)}));
  if (!r.is_zero()) throw DomainError("deflate: not a root");
  return q;
}

}  // namespace

std::optional<std::vector<GaussianRational>> exact_roots(const Poly& p) {
  if (p.is_zero()) throw DomainError("exact_roots of zero polynomial");
  std::vector<GaussianRational> roots;
  Poly cur = p.monic();
  // multiplicities blur numeric roots, so try progressively looser
  // reconstruction tiers; every candidate is verified exactly before use
  const struct {
    double tol;
    long max_den;
  } tiers[] = {{1e-9, 1000000000000L}, {1e-5, 100000L}, {2e-3, 1000L}};
  while (cur.degree() > 0) {
    auto numeric = companion_roots(cur);
    bool found = false;
    for (const auto& z : numeric) {
      for (const auto& tier : tiers) {
        auto cand = reconstruct_gaussian(z, tier.tol, Int(tier.max_den));
        if (cand && cur.eval(*cand).is_zero()) {
          roots.push_back(*cand);
          cur = deflate(cur, *cand);
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) return std::nullopt;
  }
  std::sort(roots.begin(), roots.end(), [](const GaussianRational& a, const GaussianRational& b) {
    if (a.re() != b.re()) return a.re() < b.re();
    return a.im() < b.im();
  });
  return roots;
}

}  // namespace holopow
