#pragma once

#include <algorithm>
#include <complex>
#include <limits>
#include <utility>
#include <vector>

#include "holopow/rational.hpp"

namespace holopow {

/// Degree reported for the zero polynomial.
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

/// Dense univariate polynomial over a field scalar, coefficients stored in
/// ascending power order with trailing zeros stripped.
template <class S>
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(S c) { coeffs_.push_back(std::move(c)); normalize(); }  // NOLINT
  Polynomial(int c) : Polynomial(S(c)) {}                            // NOLINT
  explicit Polynomial(std::vector<S> ascending) : coeffs_(std::move(ascending)) { normalize(); }

  static Polynomial x() { return Polynomial(std::vector<S>{S(0), S(1)}); }

  /// c * x^k
  static Polynomial monomial(S c, int k) {
    std::vector<S> v(static_cast<std::size_t>(k) + 1, S(0));
    v.back() = std::move(c);
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? kNegInfDegree : static_cast<int>(coeffs_.size()) - 1; }

  const S& leading() const {
    static const S zero(0);
    return coeffs_.empty() ? zero : coeffs_.back();
  }

  S coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return S(0);
    return coeffs_[static_cast<std::size_t>(k)];
  }

  const std::vector<S>& coeffs() const { return coeffs_; }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (S& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (this == &o) {
      for (S& c : coeffs_) c += c;
      normalize();
      return *this;
    }
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), S(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) { return *this += -o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> c(a.coeffs_.size() + b.coeffs_.size() - 1, S(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const S& s, Polynomial p) {
    for (S& c : p.coeffs_) c = s * c;
    p.normalize();
    return p;
  }
  friend Polynomial operator*(Polynomial p, const S& s) { return s * std::move(p); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<S> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = S(static_cast<int>(k)) * coeffs_[k];
    return Polynomial(std::move(d));
  }

  /// Horner evaluation at a scalar of the coefficient field.
  S eval(const S& x) const {
    S acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Horner evaluation after converting coefficients with `conv`.
  template <class T, class Conv>
  T eval_with(const T& x, Conv conv) const {
    T acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + conv(*it);
    return acc;
  }

  Polynomial pow(long e) const {
    Polynomial acc{S(1)}, base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  /// Quotient and remainder of field division; divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    Polynomial r = *this;
    std::vector<S> q;
    int dd = d.degree();
    if (r.degree() >= dd) q.assign(static_cast<std::size_t>(r.degree() - dd) + 1, S(0));
    const S inv_lead = S(1) / d.leading();
    while (!r.is_zero() && r.degree() >= dd) {
      int k = r.degree() - dd;
      S f = r.leading() * inv_lead;
      q[static_cast<std::size_t>(k)] = f;
      // r -= f * x^k * d, done in place
      for (std::size_t j = 0; j < d.coeffs_.size(); ++j)
        r.coeffs_[static_cast<std::size_t>(k) + j] -= f * d.coeffs_[j];
      r.normalize();
    }
    return {Polynomial(std::move(q)), std::move(r)};
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    return (S(1) / leading()) * (*this);
  }

  /// Composition x -> x + c.
  Polynomial shift(const S& c) const {
    Polynomial acc;
    const Polynomial lin(std::vector<S>{c, S(1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + Polynomial(*it);
    return acc;
  }

  /// Composition x -> -x.
  Polynomial reflect() const {
    Polynomial r = *this;
    for (std::size_t k = 1; k < r.coeffs_.size(); k += 2) r.coeffs_[k] = -r.coeffs_[k];
    return r;
  }

  /// Multiplicity of the root at 0 (0 for nonzero constant term; 0 for zero poly).
  int order_at_zero() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (!coeffs_[k].is_zero()) return static_cast<int>(k);
    return 0;
  }

private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<S> coeffs_;
};

/// Monic greatest common divisor by the Euclidean algorithm; gcd(p, 0) is
/// monic(p) and gcd(0, 0) = 0.
template <class S>
Polynomial<S> gcd(const Polynomial<S>& p, const Polynomial<S>& q) {
  Polynomial<S> a = p, b = q;
  while (!b.is_zero()) {
    auto [quot, rem] = a.divmod(b);
    (void)quot;
    a = std::move(b);
    b = std::move(rem);
    b = b.monic();  // keeps coefficient growth down
  }
  return a.monic();
}

template <class S>
Polynomial<S> lcm(const Polynomial<S>& p, const Polynomial<S>& q) {
  if (p.is_zero() || q.is_zero()) return {};
  Polynomial<S> g = gcd(p, q);
  return (p * q).divmod(g).first.monic();
}

/// prod (x - roots[k])
template <class S>
Polynomial<S> from_roots(const std::vector<S>& roots) {
  Polynomial<S> acc{S(1)};
  for (const S& r : roots) acc = acc * Polynomial<S>(std::vector<S>{-r, S(1)});
  return acc;
}

/// Falling-factorial polynomial [x]_k = x (x-1) ... (x-k+1).
template <class S>
Polynomial<S> falling_factorial_poly(int k) {
  Polynomial<S> acc{S(1)};
  for (int j = 0; j < k; ++j) acc = acc * Polynomial<S>(std::vector<S>{S(-j), S(1)});
  return acc;
}

/// Coefficients d_j of p in the falling-factorial basis, p = sum d_j [x]_j,
/// via forward differences at 0, 1, 2, ...
template <class S>
std::vector<S> falling_factorial_coeffs(const Polynomial<S>& p) {
  if (p.is_zero()) return {};
  std::vector<S> d;
  Polynomial<S> cur = p;
  Int fact = 1;
  for (int j = 0; !cur.is_zero(); ++j) {
    if (j > 0) fact *= j;
    d.push_back(cur.eval(S(0)) / S(Rational(fact)));
    cur = cur.shift(S(1)) - cur;  // forward difference
  }
  return d;
}

using Poly = Polynomial<GaussianRational>;
using RealPoly = Polynomial<Rational>;

inline std::complex<double> to_complex(const GaussianRational& z) { return z.to_complex(); }

/// Numeric Horner evaluation of an exact polynomial.
inline std::complex<double> eval_numeric(const Poly& p, std::complex<double> x) {
  return p.eval_with(x, [](const GaussianRational& c) { return c.to_complex(); });
}

inline double eval_numeric(const RealPoly& p, double x) {
  return p.eval_with(x, [](const Rational& c) { return c.to_double(); });
}

}  // namespace holopow
