#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <utility>

#include "holopow/errors.hpp"

namespace holopow {

using Int = mpz_class;

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator (zero is 0/1).
class Rational {
public:
  Rational() : q_(0) {}
  Rational(int v) : q_(v) {}                // NOLINT: implicit by design
  Rational(long v) : q_(static_cast<signed long>(v)) {}
  Rational(const Int& v) : q_(v) {}
  Rational(const Int& num, const Int& den) : q_(num, den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  const Int num() const { return q_.get_num(); }
  const Int den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  Rational inv() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return Rational(mpq_class(1) / q_);
  }

  Rational pow(long e) const {
    if (e == 0) return Rational(1);
    const Rational base = e > 0 ? *this : inv();
    unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.q_.get_num_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.q_.get_den_mpz_t(), k);
    return Rational(num, den);
  }

  /// Nearest integer, ties toward +infinity.
  Int round() const {
    // floor((2*num + den) / (2*den))
    Int t = 2 * q_.get_num() + q_.get_den();
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), t.get_mpz_t(), Int(2 * q_.get_den()).get_mpz_t());
    return r;
  }

  double to_double() const { return q_.get_d(); }

  std::string str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

private:
  mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

/// Complex number with rational real and imaginary parts: the exact scalar
/// field Q(i) used for all symbolic computation.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(int v) : re_(v) {}       // NOLINT: implicit by design
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  bool is_integer() const { return re_.is_integer() && im_.is_integer(); }

  GaussianRational conj() const { return {re_, -im_}; }

  /// |z|^2 = re^2 + im^2, an exact Rational.
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inv(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  GaussianRational inv() const {
    Rational n = norm2();
    if (n.is_zero()) throw DomainError("inverse of zero");
    return {re_ / n, -im_ / n};
  }

  GaussianRational pow(long e) const {
    if (e < 0) return inv().pow(-e);
    GaussianRational acc(1), base = *this;
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

  std::string str() const;

private:
  Rational re_;
  Rational im_;
};

/// i^e, exact.
inline GaussianRational i_pow(long e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return GaussianRational(1);
    case 1: return GaussianRational::i();
    case 2: return GaussianRational(-1);
    default: return -GaussianRational::i();
  }
}

inline std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string im_part;
  Rational a = im_.abs();
  im_part = a.is_one() ? "i" : a.str() + "*i";
  if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + im_part;
  return "(" + re_.str() + (im_.sign() < 0 ? " - " : " + ") + im_part + ")";
}

// --- Gaussian-integer helpers (values with integer re/im parts) ---

/// Remainder-minimizing division in Z[i]: returns q with N(a - q*b) <= N(b)/2.
inline GaussianRational gaussian_int_div_round(const GaussianRational& a, const GaussianRational& b) {
  GaussianRational q = a * b.conj();
  Rational n = b.norm2();
  return {Rational(Rational(q.re() / n).round()), Rational(Rational(q.im() / n).round())};
}

/// Euclidean gcd in Z[i]; result defined up to a unit. gcd(0,0) = 0.
inline GaussianRational gaussian_int_gcd(GaussianRational a, GaussianRational b) {
  while (!b.is_zero()) {
    GaussianRational q = gaussian_int_div_round(a, b);
    GaussianRational r = a - q * b;
    a = b;
    b = r;
  }
  return a;
}

// --- small combinatorial helpers ---

/// Falling factorial [n]_k = n (n-1) ... (n-k+1); [n]_0 = 1.
inline Int falling_factorial(long n, long k) {
  Int acc = 1;
  for (long j = 0; j < k; ++j) acc *= Int(n - j);
  return acc;
}

inline Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline Int factorial(long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// Rising factorial (x)_k = x (x+1) ... (x+k-1) over any scalar with * and +.
template <class S>
S rising_factorial(const S& x, long k) {
  S acc(1);
  for (long j = 0; j < k; ++j) acc = acc * (x + S(static_cast<int>(j)));
  return acc;
}

}  // namespace holopow
