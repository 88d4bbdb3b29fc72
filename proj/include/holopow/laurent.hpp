#pragma once

#include <limits>
#include <utility>

#include "holopow/polynomial.hpp"

namespace holopow {

/// mindeg of the zero Laurent polynomial.
inline constexpr int kMindegZero = std::numeric_limits<int>::max();
/// maxdeg of the zero Laurent polynomial.
inline constexpr int kMaxdegZero = std::numeric_limits<int>::min();

struct LaurentBounds {
  int mindeg;  // +infinity sentinel kMindegZero for 0
  int maxdeg;  // -infinity sentinel kMaxdegZero for 0
  friend bool operator==(const LaurentBounds&, const LaurentBounds&) = default;
};

/// Laurent polynomial x^offset * p(x) with p(0) != 0 unless zero.
template <class S>
class LaurentPolynomial {
public:
  LaurentPolynomial() = default;
  LaurentPolynomial(S c) : poly_(std::move(c)) { normalize(); }  // NOLINT
  LaurentPolynomial(int c) : poly_(S(c)) { normalize(); }        // NOLINT
  LaurentPolynomial(Polynomial<S> p) : poly_(std::move(p)) { normalize(); }  // NOLINT
  LaurentPolynomial(int offset, Polynomial<S> p) : offset_(offset), poly_(std::move(p)) {
    normalize();
  }

  static LaurentPolynomial monomial(S c, int k) { return {k, Polynomial<S>(std::move(c))}; }

  bool is_zero() const { return poly_.is_zero(); }
  int mindeg() const { return is_zero() ? kMindegZero : offset_ + poly_.order_at_zero(); }
  int maxdeg() const { return is_zero() ? kMaxdegZero : offset_ + poly_.degree(); }
  LaurentBounds bounds() const { return {mindeg(), maxdeg()}; }

  /// Coefficient of x^k.
  S coeff(int k) const { return poly_.coeff(k - offset_); }

  /// Underlying polynomial factor and its offset: value = x^offset * poly.
  const Polynomial<S>& poly() const { return poly_; }
  int offset() const { return offset_; }

  LaurentPolynomial operator-() const { return {offset_, -poly_}; }

  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int off = std::min(a.offset_, b.offset_);
    return {off, shifted(a, off) + shifted(b, off)};
  }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a + (-b);
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return {a.offset_ + b.offset_, a.poly_ * b.poly_};
  }
  friend LaurentPolynomial operator*(const S& s, const LaurentPolynomial& p) {
    return {p.offset_, s * p.poly_};
  }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.offset_ == b.offset_ && a.poly_ == b.poly_;
  }
  friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) { return !(a == b); }

  LaurentPolynomial mul_x_pow(int k) const {
    if (is_zero()) return {};
    return {offset_ + k, poly_};
  }

  LaurentPolynomial derivative() const {
    // d/dx x^(m+k) = (m+k) x^(m+k-1)
    if (is_zero()) return {};
    std::vector<S> d(poly_.coeffs().size(), S(0));
    for (std::size_t k = 0; k < poly_.coeffs().size(); ++k)
      d[k] = S(offset_ + static_cast<int>(k)) * poly_.coeffs()[k];
    return {offset_ - 1, Polynomial<S>(std::move(d))};
  }

  /// Lowest-degree term (coefficient, exponent); only for nonzero values.
  std::pair<S, int> ini() const {
    if (is_zero()) throw DomainError("ini of zero");
    int k = poly_.order_at_zero();
    return {poly_.coeff(k), offset_ + k};
  }

private:
  void normalize() {
    if (poly_.is_zero()) {
      offset_ = 0;
      return;
    }
    int low = poly_.order_at_zero();
    if (low > 0) {
      std::vector<S> c(poly_.coeffs().begin() + low, poly_.coeffs().end());
      poly_ = Polynomial<S>(std::move(c));
      offset_ += low;
    }
  }

  static Polynomial<S> shifted(const LaurentPolynomial& p, int to_offset) {
    // multiply by x^(offset - to_offset) >= 0
    int k = p.offset_ - to_offset;
    return p.poly_ * Polynomial<S>::monomial(S(1), k);
  }

  int offset_ = 0;
  Polynomial<S> poly_;
};

template <class S>
LaurentBounds laurent_bounds(const LaurentPolynomial<S>& p) {
  return p.bounds();
}

using Laurent = LaurentPolynomial<GaussianRational>;

}  // namespace holopow
