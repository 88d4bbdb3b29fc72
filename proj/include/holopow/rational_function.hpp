#pragma once

#include <complex>
#include <optional>
#include <utility>

#include "holopow/laurent.hpp"
#include "holopow/polynomial.hpp"

namespace holopow {

/// Quotient of polynomials in canonical form: gcd(num, den) = 1 and den monic.
template <class S>
class RationalFunction {
public:
  RationalFunction() : num_(), den_{S(1)} {}
  RationalFunction(S c) : num_(std::move(c)), den_{S(1)} {}  // NOLINT
  RationalFunction(int c) : num_(S(c)), den_{S(1)} {}        // NOLINT
  RationalFunction(Polynomial<S> p) : num_(std::move(p)), den_{S(1)} {}  // NOLINT
  RationalFunction(Polynomial<S> num, Polynomial<S> den) : num_(std::move(num)), den_(std::move(den)) {
    reduce();
  }
  RationalFunction(const LaurentPolynomial<S>& p) {  // NOLINT
    if (p.offset() >= 0) {
      num_ = p.poly() * Polynomial<S>::monomial(S(1), p.offset());
      den_ = Polynomial<S>{S(1)};
    } else {
      num_ = p.poly();
      den_ = Polynomial<S>::monomial(S(1), -p.offset());
    }
  }

  static RationalFunction x() { return RationalFunction(Polynomial<S>::x()); }

  const Polynomial<S>& num() const { return num_; }
  const Polynomial<S>& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Laurent form when the denominator is a monomial x^k; nullopt otherwise.
  std::optional<LaurentPolynomial<S>> to_laurent() const {
    int k = den_.degree();
    if (den_ != Polynomial<S>::monomial(S(1), k)) return std::nullopt;
    return LaurentPolynomial<S>(-k, num_);
  }

  RationalFunction operator-() const { return make_reduced(-num_, den_); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DomainError("rational function division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  RationalFunction derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  S eval(const S& x) const {
    S d = den_.eval(x);
    if (d.is_zero()) throw PoleError("evaluation at a pole");
    return num_.eval(x) / d;
  }

  RationalFunction pow(long e) const {
    if (e < 0) return (RationalFunction(1) / *this).pow(-e);
    RationalFunction acc(1), base = *this;
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

private:
  static RationalFunction make_reduced(Polynomial<S> n, Polynomial<S> d) {
    RationalFunction r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;  // caller guarantees canonical form
  }

  void reduce() {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Polynomial<S>{S(1)};
      return;
    }
    Polynomial<S> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
    S lead = den_.leading();
    if (!lead.is_one()) {
      S inv = S(1) / lead;
      num_ = inv * num_;
      den_ = inv * den_;
    }
  }

  Polynomial<S> num_;
  Polynomial<S> den_;
};

using RatFun = RationalFunction<GaussianRational>;

inline std::complex<double> eval_numeric(const RatFun& f, std::complex<double> x) {
  std::complex<double> d = eval_numeric(f.den(), x);
  if (std::abs(d) < 1e-300) throw PoleError("numeric evaluation at a pole");
  return eval_numeric(f.num(), x) / d;
}

}  // namespace holopow
