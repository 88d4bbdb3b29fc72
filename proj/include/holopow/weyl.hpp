#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "holopow/rational_function.hpp"
#include "holopow/text.hpp"

namespace holopow {

/// Element of the polynomial Weyl algebra C<x, Dx> in normal form: a finite
/// sum of terms c * x^a * Dx^b with all x-powers left of Dx-powers. The
/// defining relation is Dx x = x Dx + 1.
class WeylElement {
public:
  using Key = std::pair<int, int>;  // (x-power a, Dx-power b)

  WeylElement() = default;
  explicit WeylElement(GaussianRational c) { add_term(0, 0, std::move(c)); }

  static WeylElement term(GaussianRational c, int xpow, int dpow);
  static WeylElement x() { return term(GaussianRational(1), 1, 0); }
  static WeylElement dx() { return term(GaussianRational(1), 0, 1); }

  const std::map<Key, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Highest Dx-power with nonzero coefficient (kNegInfDegree if zero).
  int order() const;
  /// Highest x-power (kNegInfDegree if zero).
  int x_degree() const;
  /// max(a + b) over nonzero terms (kNegInfDegree if zero).
  int total_degree() const;

  void add_term(int xpow, int dpow, GaussianRational c);

  WeylElement operator-() const;
  friend WeylElement operator+(const WeylElement& u, const WeylElement& v);
  friend WeylElement operator-(const WeylElement& u, const WeylElement& v);
  friend WeylElement operator*(const GaussianRational& s, const WeylElement& v);
  friend bool operator==(const WeylElement& u, const WeylElement& v) {
    return u.terms_ == v.terms_;
  }

  /// Sign substitution x -> -x, Dx -> -Dx.
  WeylElement negate_generators() const;

private:
  std::map<Key, GaussianRational> terms_;
};

/// Normal-form product in the Weyl algebra.
WeylElement weyl_mul(const WeylElement& u, const WeylElement& v);
inline WeylElement operator*(const WeylElement& u, const WeylElement& v) { return weyl_mul(u, v); }

WeylElement weyl_pow(const WeylElement& u, int e);

/// Image under the Fourier ring isomorphism x -> i Dx, Dx -> i x,
/// renormalized to normal form.
WeylElement fourier(const WeylElement& w);

/// Linear differential operator sum coeffs[k](x) Dx^k with rational-function
/// coefficients; the top coefficient is nonzero.
class DiffOperator {
public:
  DiffOperator() : coeffs_{RatFun(0)} {}
  explicit DiffOperator(std::vector<RatFun> coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const RatFun& coeff(int k) const;
  const std::vector<RatFun>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }
  bool has_polynomial_coeffs() const;

  friend bool operator==(const DiffOperator& a, const DiffOperator& b) {
    return a.coeffs_ == b.coeffs_;
  }

private:
  std::vector<RatFun> coeffs_;
};

/// Weyl normal form of an operator with polynomial coefficients; throws
/// DomainError if any coefficient has a nontrivial denominator.
WeylElement to_weyl(const DiffOperator& op);

/// Coefficient view of a Weyl element (polynomial coefficients by Dx-power).
DiffOperator to_diff_operator(const WeylElement& w);

/// Canonical representative of the scalar class of an operator: denominators
/// cleared, coefficients made coprime polynomials with unit Gaussian-integer
/// content, and the leading coefficient of the top-order polynomial given
/// positive real part (positive imaginary part when the real part is zero).
DiffOperator canonicalize(const DiffOperator& op);

/// Equality up to multiplication by a nonzero scalar.
bool equal_up_to_scalar(const DiffOperator& a, const DiffOperator& b);

/// Also normalizes a bare coefficient vector (used for kernel vectors).
std::vector<Poly> canonicalize_coeff_polys(std::vector<Poly> v);

/// Euler-operator form sum_a x^a q_a(theta), theta = x Dx, for an operator
/// whose coefficients are Laurent polynomials. Exact and invertible.
class ThetaForm {
public:
  ThetaForm() = default;
  explicit ThetaForm(std::map<int, Poly> terms);

  const std::map<int, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_x_power() const;
  int max_x_power() const;
  const Poly& at(int xpow) const;

  friend bool operator==(const ThetaForm& a, const ThetaForm& b) { return a.terms_ == b.terms_; }

private:
  std::map<int, Poly> terms_;
};

ThetaForm to_theta_form(const DiffOperator& op);
ThetaForm to_theta_form(const WeylElement& w);

/// Inverse rewriting. Negative x-powers are cleared by premultiplying with
/// x^shift; returns the Weyl element and the shift used.
std::pair<WeylElement, int> theta_to_weyl(const ThetaForm& tf);

/// sum coeffs[k](x) * derivs[k] in floating point; derivs[k] approximates the
/// k-th derivative of a candidate solution at x.
std::complex<double> residual_eval(const DiffOperator& op, std::complex<double> x,
                                   const std::vector<std::complex<double>>& derivs);

// --- serialization ---
// JSON schema: {"order": r, "coeffs": [poly, ...]} with coeffs listed by
// ascending Dx-power; each poly lists [re_num, re_den, im_num, im_den]
// 4-tuples by ascending x-power. Integers that fit in 64 bits are emitted as
// JSON numbers, larger ones as decimal strings; both are accepted on input.
// The operator is canonicalized (polynomial coefficients) before encoding.

nlohmann::json operator_to_json(const DiffOperator& op);
DiffOperator operator_from_json(const nlohmann::json& j);

/// Plain-text form `(poly)*Dx^k + ...`.
std::string to_text(const DiffOperator& op);
DiffOperator operator_from_text(std::string_view text);

}  // namespace holopow
