#include "holopow/linsolve.hpp"

#include "holopow/errors.hpp"

namespace holopow {

namespace {

// lcm of the re/im denominators across a row of [A | b].
Int row_denominator_lcm(const GRatMatrix& a, const GRatVector& b, Eigen::Index i) {
  Int l = 1;
  auto absorb = [&l](const GaussianRational& z) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.re().den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.im().den().get_mpz_t());
  };
  for (Eigen::Index j = 0; j < a.cols(); ++j) absorb(a(i, j));
  absorb(b(i));
  return l;
}

}  // namespace

GRatVector solve_exact(GRatMatrix a, GRatVector b) {
  if (a.rows() != a.cols()) throw DomainError("solve_exact: matrix must be square");
  if (a.rows() != b.size()) throw DomainError("solve_exact: size mismatch");
  const Eigen::Index n = a.rows();

  for (Eigen::Index i = 0; i < n; ++i) {
    GaussianRational s{Rational(row_denominator_lcm(a, b, i))};
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) *= s;
    b(i) *= s;
  }

  GaussianRational prev(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (a(k, k).is_zero()) {
      Eigen::Index p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) throw SingularMatrixError(static_cast<int>(k));
      a.row(k).swap(a.row(p));
      std::swap(b(k), b(p));
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      b(i) = (b(i) * a(k, k) - a(i, k) * b(k)) / prev;
      a(i, k) = GaussianRational(0);
    }
    prev = a(k, k);
  }

  GRatVector x(n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    GaussianRational acc = b(i);
    for (Eigen::Index j = i + 1; j < n; ++j) acc -= a(i, j) * x(j);
    x(i) = acc / a(i, i);
  }
  return x;
}

}  // namespace holopow
