#pragma once

#include <vector>

#include "holopow/eigen_support.hpp"
#include "holopow/weyl.hpp"

namespace holopow {

/// Second-order seed equation Dx^2 f = a1 Dx f + a0 f, i.e. the operator
/// Dx^2 - a1(x) Dx - a0(x).
struct SecondOrderSeed {
  RatFun a0;
  RatFun a1;

  DiffOperator as_operator() const {
    return DiffOperator(std::vector<RatFun>{-a0, -a1, RatFun(1)});
  }
};

/// The (n+1) x (n+2) recursion matrix: column 0 is e0 and column j+1 applies
/// q[i][j+1] = (n+1-i) q[i-1][j] + (d/dx + i a1) q[i][j] + (i+1) a0 q[i+1][j].
/// Upper-triangular with diagonal q[i][i] = [n]_i.
struct QMatrix {
  int n = 0;
  RatFunMatrix q;  // (n+1) rows, (n+2) columns
};

QMatrix build_q(const SecondOrderSeed& seed, int n);

/// Row-major debug listing, one rendered entry per cell.
std::string qmatrix_dump(const QMatrix& q);

/// Right nullspace vector (v_0, ..., v_n, 1) of Q, by back-substitution on
/// the triangular structure.
std::vector<RatFun> kernel_vector(const QMatrix& q);

/// The (n+1)-th order annihilator of f^n with canonical coprime polynomial
/// coefficients.
struct PowerODE {
  int n = 0;
  std::vector<Poly> kernel;  // v_0 ... v_{n+1}, coprime canonical polynomials
  DiffOperator op;           // sum kernel[k] Dx^k
  SecondOrderSeed seed;
};

PowerODE power_operator(const SecondOrderSeed& seed, int n);

/// Value of the degree bound
///   max{M0+(n-1)M1, n M1, 0} - min{m0, m1} - (n-1) m1
/// by plain substitution, with the zero-coefficient sentinels handled.
long maxdeg_bound_formula(const LaurentBounds& a0, const LaurentBounds& a1, int n);

/// Degree bound for the coprime kernel polynomials of power_operator. The
/// seed coefficients must be Laurent polynomials satisfying m1 <= -1,
/// M1 >= -1, m0 >= 2 m1, M0 <= 2 M1; violations raise HypothesisError naming
/// the failed inequality.
long degree_bound(const SecondOrderSeed& seed, int n);

/// The exponents (n-k) l1 + k l2 of the power equation at a regular singular
/// point whose seed exponents are l1, l2.
struct ExponentPrediction {
  GaussianRational lambda1, lambda2;
  int n = 0;
  std::vector<GaussianRational> values;  // k = 0..n
};

ExponentPrediction predicted_exponents(const GaussianRational& l1, const GaussianRational& l2,
                                       int n);

/// The (n+1) x (n+1) tridiagonal matrix with subdiagonal n, n-1, ..., 1,
/// diagonal k (l1 + l2) and superdiagonal -k l1 l2; its characteristic
/// polynomial is the indicial polynomial of the power equation.
GRatMatrix eig_matrix(const GaussianRational& l1, const GaussianRational& l2, int n);

/// The similar matrix M'/l1 expressed through z = l2/l1: subdiagonal
/// -(n-k) z, diagonal k (1+z), superdiagonal k+1. Its eigenvalues are
/// mu_k = k z + (n-k).
GRatMatrix eig_matrix_scaled(int n, const GaussianRational& z);

/// det(lambda I - m) for a tridiagonal matrix, exact.
Poly char_poly_tridiag(const GRatMatrix& m);

/// Entry l of the eigenvector of eig_matrix_scaled(n, z) for mu_k is
/// sum_j C(n-k, l-j) C(k, j) z^j; for z = 1 the generalized-eigenvector
/// family C(n-k, l) is returned instead.
GRatVector eig_vector(int n, int k, const GaussianRational& z);

/// Exact check of the contiguous relation
///   c(c-1) 2F1(-k,-l-1,c-1;z) - c(c-1+(k-l)z) 2F1(-k,-l,c;z)
///     - l(c+k) z 2F1(-k,-l+1,c+1;z) = 0,   c = n-k-l+1,
/// with every terminating sum evaluated exactly.
bool check_2f1_recursion(int k, int l, int n, const GaussianRational& z);

/// Terminating Gauss sum 2F1(a, b, c; z) for a a nonpositive integer.
GaussianRational hypergeom_2f1_terminating(int a, int b, const GaussianRational& c,
                                           const GaussianRational& z);

}  // namespace holopow
