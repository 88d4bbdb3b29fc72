#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "holopow/weyl.hpp"

namespace holopow {

/// A point of the extended complex plane at which singular structure is read.
struct SingularPoint {
  bool at_infinity = false;
  GaussianRational value;  // meaningful only when !at_infinity

  static SingularPoint finite(GaussianRational z) { return {false, std::move(z)}; }
  static SingularPoint infinity() { return {true, GaussianRational(0)}; }
};

struct IndicialResult {
  SingularPoint point;
  bool regular = false;
  /// Monic indicial polynomial b(lambda); present only when regular.
  std::optional<Poly> poly;
  /// All roots, when every one of them lies in Q(i); verified exactly.
  std::optional<std::vector<GaussianRational>> exponents_exact;
  /// Companion-matrix eigenvalues of the indicial polynomial.
  std::vector<std::complex<double>> exponents_numeric;
};

/// Indicial data of `op` relative to `point`. The operator is first
/// canonicalized to coprime polynomial coefficients; a finite point is moved
/// to the origin by the exact translation x -> x + x0. The point is regular
/// (regular singular or ordinary) iff the theta-form coefficient at the
/// extreme x-power has degree equal to the operator order; that coefficient,
/// made monic, is the indicial polynomial. At infinity the extreme power is
/// the highest, at a finite point the lowest.
IndicialResult indicial(const DiffOperator& op, const SingularPoint& point);

/// Exact membership test: poly(lambda) == 0. Requires res.regular.
bool exponent_check(const IndicialResult& res, const GaussianRational& lambda);

enum class FourierSide {
  kZeroToInfinity,  // regular point 0 of L -> regular point infinity of F[L]
  kInfinityToZero   // regular point infinity of L -> regular point 0 of F[L]
};

/// Exponent transport under the Fourier transform for an operator of order r
/// whose leading coefficient has degree d: each exponent mu maps to -mu-1;
/// the infinity->0 direction additionally gains the integer exponents
/// 0, ..., d-r-1. Hypotheses (d <= r resp. d >= r, and the expected list
/// length) are enforced.
std::vector<GaussianRational> fourier_exponents(const std::vector<GaussianRational>& exps, int d,
                                                int r, FourierSide side);

/// Roots of a nonconstant polynomial as eigenvalues of the balanced
/// companion matrix.
std::vector<std::complex<double>> companion_roots(const Poly& p);

/// All roots over Q(i) if the polynomial splits there (multiplicities
/// repeated), found by rational reconstruction of numeric roots, exact
/// verification and exact deflation; nullopt as soon as one root resists.
std::optional<std::vector<GaussianRational>> exact_roots(const Poly& p);

/// Nearest rational p/q with q <= max_den and |p/q - v| <= tol, by continued
/// fractions; nullopt if no convergent qualifies.
std::optional<Rational> reconstruct_rational(double v, double tol, const Int& max_den);

}  // namespace holopow
