#include "holopow/weyl.hpp"

#include <algorithm>

#include "lexer.hpp"

namespace holopow {

// --- WeylElement ---

WeylElement WeylElement::term(GaussianRational c, int xpow, int dpow) {
  if (xpow < 0 || dpow < 0) throw DomainError("Weyl term with negative power");
  WeylElement w;
  w.add_term(xpow, dpow, std::move(c));
  return w;
}

void WeylElement::add_term(int xpow, int dpow, GaussianRational c) {
  if (c.is_zero()) return;
  Key k{xpow, dpow};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int WeylElement::order() const {
  int m = kNegInfDegree;
  for (const auto& [k, c] : terms_) m = std::max(m, k.second);
  return m;
}

int WeylElement::x_degree() const {
  int m = kNegInfDegree;
  for (const auto& [k, c] : terms_) m = std::max(m, k.first);
  return m;
}

int WeylElement::total_degree() const {
  int m = kNegInfDegree;
  for (const auto& [k, c] : terms_) m = std::max(m, k.first + k.second);
  return m;
}

WeylElement WeylElement::operator-() const {
  WeylElement r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

WeylElement operator+(const WeylElement& u, const WeylElement& v) {
  WeylElement r = u;
  for (const auto& [k, c] : v.terms_) r.add_term(k.first, k.second, c);
  return r;
}

WeylElement operator-(const WeylElement& u, const WeylElement& v) { return u + (-v); }

WeylElement operator*(const GaussianRational& s, const WeylElement& v) {
  WeylElement r;
  if (s.is_zero()) return r;
  for (const auto& [k, c] : v.terms()) r.add_term(k.first, k.second, s * c);
  return r;
}

WeylElement WeylElement::negate_generators() const {
  WeylElement r;
  for (const auto& [k, c] : terms_)
    r.add_term(k.first, k.second, ((k.first + k.second) % 2 == 0) ? c : -c);
  return r;
}

namespace {

// Dx^b x^a = sum_k C(b,k) [a]_k x^(a-k) Dx^(b-k)
void accumulate_normal_product(WeylElement& out, const GaussianRational& c, int a1, int b1, int a2,
                               int b2) {
  int kmax = std::min(b1, a2);
  for (int k = 0; k <= kmax; ++k) {
    Int w = binomial(b1, k) * falling_factorial(a2, k);
    out.add_term(a1 + a2 - k, b1 + b2 - k, c * GaussianRational(Rational(w)));
  }
}

}  // namespace

WeylElement weyl_mul(const WeylElement& u, const WeylElement& v) {
  WeylElement out;
  for (const auto& [ku, cu] : u.terms())
    for (const auto& [kv, cv] : v.terms())
      accumulate_normal_product(out, cu * cv, ku.first, ku.second, kv.first, kv.second);
  return out;
}

WeylElement weyl_pow(const WeylElement& u, int e) {
  if (e < 0) throw DomainError("negative Weyl power");
  WeylElement acc(GaussianRational(1));
  for (int j = 0; j < e; ++j) acc = weyl_mul(acc, u);
  return acc;
}

WeylElement fourier(const WeylElement& w) {
  WeylElement out;
  for (const auto& [k, c] : w.terms()) {
    // x^a Dx^b -> (i Dx)^a (i x)^b = i^(a+b) Dx^a x^b, then normal-order
    GaussianRational f = c * i_pow(k.first + k.second);
    accumulate_normal_product(out, f, 0, k.first, k.second, 0);
  }
  return out;
}

// --- DiffOperator ---

DiffOperator::DiffOperator(std::vector<RatFun> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(RatFun(0));
}

const RatFun& DiffOperator::coeff(int k) const {
  static const RatFun zero(0);
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[static_cast<std::size_t>(k)];
}

bool DiffOperator::has_polynomial_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const RatFun& c) { return c.is_polynomial(); });
}

WeylElement to_weyl(const DiffOperator& op) {
  WeylElement w;
  for (int k = 0; k <= op.order(); ++k) {
    const RatFun& c = op.coeff(k);
    if (!c.is_polynomial())
      throw DomainError("operator has non-polynomial coefficients; canonicalize first");
    const Poly& p = c.num();
    for (int a = 0; a <= p.degree(); ++a) w.add_term(a, k, p.coeff(a));
  }
  return w;
}

DiffOperator to_diff_operator(const WeylElement& w) {
  int r = std::max(w.order(), 0);
  std::vector<std::vector<GaussianRational>> cols(static_cast<std::size_t>(r) + 1);
  for (const auto& [k, c] : w.terms()) {
    auto& col = cols[static_cast<std::size_t>(k.second)];
    if (static_cast<int>(col.size()) <= k.first) col.resize(static_cast<std::size_t>(k.first) + 1);
    col[static_cast<std::size_t>(k.first)] = c;
  }
  std::vector<RatFun> coeffs;
  coeffs.reserve(cols.size());
  for (auto& col : cols) coeffs.emplace_back(Poly(std::move(col)));
  return DiffOperator(std::move(coeffs));
}

// --- canonicalization ---

namespace {

// Unit u in {1, i, -1, -i} rotating z into the closed quadrant re > 0,
// im >= 0 (for z on the imaginary axis this lands on the positive real axis).
GaussianRational select_unit(const GaussianRational& z) {
  GaussianRational u(1);
  for (int j = 0; j < 4; ++j) {
    GaussianRational w = u * z;
    if (w.re().sign() > 0 && w.im().sign() >= 0) return u;
    u *= GaussianRational::i();
  }
  throw DomainError("unit normalization of zero");
}

Int scalar_den_lcm(const std::vector<Poly>& v) {
  Int l = 1;
  for (const Poly& p : v)
    for (const GaussianRational& c : p.coeffs()) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().den().get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().den().get_mpz_t());
    }
  return l;
}

GaussianRational gaussian_content(const std::vector<Poly>& v) {
  GaussianRational g(0);
  for (const Poly& p : v)
    for (const GaussianRational& c : p.coeffs()) g = gaussian_int_gcd(g, c);
  return g;
}

}  // namespace

std::vector<Poly> canonicalize_coeff_polys(std::vector<Poly> v) {
  bool all_zero = std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
  if (all_zero) return v;

  GaussianRational scale{Rational(scalar_den_lcm(v))};
  for (Poly& p : v) p = scale * p;
  GaussianRational content = gaussian_content(v);
  for (Poly& p : v) p = (GaussianRational(1) / content) * p;

  const Poly* top = nullptr;
  for (auto it = v.rbegin(); it != v.rend(); ++it)
    if (!it->is_zero()) {
      top = &*it;
      break;
    }
  GaussianRational unit = select_unit(top->leading());
  if (!unit.is_one())
    for (Poly& p : v) p = unit * p;
  return v;
}

DiffOperator canonicalize(const DiffOperator& op) {
  if (op.is_zero()) return op;
  Poly den{GaussianRational(1)};
  for (const RatFun& c : op.coeffs()) den = lcm(den, c.den());
  std::vector<Poly> polys;
  polys.reserve(op.coeffs().size());
  for (const RatFun& c : op.coeffs())
    polys.push_back(c.num() * den.divmod(c.den()).first);
  polys = canonicalize_coeff_polys(std::move(polys));
  std::vector<RatFun> coeffs(polys.begin(), polys.end());
  return DiffOperator(std::move(coeffs));
}

bool equal_up_to_scalar(const DiffOperator& a, const DiffOperator& b) {
  return canonicalize(a) == canonicalize(b);
}

// --- theta form ---

ThetaForm::ThetaForm(std::map<int, Poly> terms) : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

int ThetaForm::min_x_power() const {
  if (terms_.empty()) throw DomainError("theta form of zero");
  return terms_.begin()->first;
}

int ThetaForm::max_x_power() const {
  if (terms_.empty()) throw DomainError("theta form of zero");
  return terms_.rbegin()->first;
}

const Poly& ThetaForm::at(int xpow) const {
  static const Poly zero;
  auto it = terms_.find(xpow);
  return it == terms_.end() ? zero : it->second;
}

ThetaForm to_theta_form(const DiffOperator& op) {
  // x^m Dx^k = x^(m-k) [theta]_k
  std::map<int, Poly> terms;
  for (int k = 0; k <= op.order(); ++k) {
    auto laurent = op.coeff(k).to_laurent();
    if (!laurent)
      throw DomainError("theta form needs Laurent coefficients; canonicalize first");
    if (laurent->is_zero()) continue;
    Poly ff = falling_factorial_poly<GaussianRational>(k);
    const Poly& p = laurent->poly();
    for (int a = 0; a <= p.degree(); ++a) {
      GaussianRational c = p.coeff(a);
      if (c.is_zero()) continue;
      int xpow = laurent->offset() + a - k;
      auto [it, inserted] = terms.try_emplace(xpow, Poly{});
      it->second += c * ff;
    }
  }
  return ThetaForm(std::move(terms));
}

ThetaForm to_theta_form(const WeylElement& w) { return to_theta_form(to_diff_operator(w)); }

std::pair<WeylElement, int> theta_to_weyl(const ThetaForm& tf) {
  // x^a q(theta) with q = sum_j d_j [theta]_j gives terms d_j x^(a+j) Dx^j.
  struct Entry {
    int xpow, dpow;
    GaussianRational c;
  };
  std::vector<Entry> entries;
  int min_x = 0;
  for (const auto& [a, q] : tf.terms()) {
    auto d = falling_factorial_coeffs(q);
    for (int j = 0; j < static_cast<int>(d.size()); ++j) {
      if (d[static_cast<std::size_t>(j)].is_zero()) continue;
      entries.push_back({a + j, j, d[static_cast<std::size_t>(j)]});
      min_x = std::min(min_x, a + j);
    }
  }
  int shift = -min_x;
  WeylElement w;
  for (const Entry& e : entries) w.add_term(e.xpow + shift, e.dpow, e.c);
  return {std::move(w), shift};
}

std::complex<double> residual_eval(const DiffOperator& op, std::complex<double> x,
                                   const std::vector<std::complex<double>>& derivs) {
  if (static_cast<int>(derivs.size()) < op.order() + 1)
    throw DomainError("residual_eval: derivative stack shorter than order+1");
  std::complex<double> acc = 0.0;
  for (int k = 0; k <= op.order(); ++k)
    acc += eval_numeric(op.coeff(k), x) * derivs[static_cast<std::size_t>(k)];
  return acc;
}

// --- serialization ---

namespace {

nlohmann::json emit_int(const Int& v) {
  if (v.fits_slong_p()) return nlohmann::json(static_cast<std::int64_t>(v.get_si()));
  return nlohmann::json(v.get_str());
}

Int read_int(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw DomainError("operator JSON: expected integer or decimal string");
}

nlohmann::json poly_to_json(const Poly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (int a = 0; a <= p.degree(); ++a) {
    GaussianRational c = p.coeff(a);
    arr.push_back(nlohmann::json::array({emit_int(c.re().num()), emit_int(c.re().den()),
                                         emit_int(c.im().num()), emit_int(c.im().den())}));
  }
  return arr;
}

Poly poly_from_json(const nlohmann::json& arr) {
  if (!arr.is_array()) throw DomainError("operator JSON: coefficient must be an array");
  std::vector<GaussianRational> c;
  for (const auto& t : arr) {
    if (!t.is_array() || t.size() != 4)
      throw DomainError("operator JSON: expected [re_num, re_den, im_num, im_den]");
    c.emplace_back(Rational(read_int(t[0]), read_int(t[1])), Rational(read_int(t[2]), read_int(t[3])));
  }
  return Poly(std::move(c));
}

}  // namespace

nlohmann::json operator_to_json(const DiffOperator& op) {
  DiffOperator canon = canonicalize(op);
  nlohmann::json coeffs = nlohmann::json::array();
  for (int k = 0; k <= canon.order(); ++k) coeffs.push_back(poly_to_json(canon.coeff(k).num()));
  return nlohmann::json{{"order", canon.order()}, {"coeffs", coeffs}};
}

DiffOperator operator_from_json(const nlohmann::json& j) {
  if (!j.contains("order") || !j.contains("coeffs"))
    throw DomainError("operator JSON: missing 'order' or 'coeffs'");
  const auto& arr = j.at("coeffs");
  if (!arr.is_array()) throw DomainError("operator JSON: 'coeffs' must be an array");
  std::vector<RatFun> coeffs;
  for (const auto& c : arr) coeffs.emplace_back(poly_from_json(c));
  DiffOperator op(std::move(coeffs));
  if (op.order() != j.at("order").get<int>())
    throw DomainError("operator JSON: declared order does not match coefficients");
  return op;
}

std::string to_text(const DiffOperator& op) {
  if (op.is_zero()) return "0";
  std::string out;
  for (int k = op.order(); k >= 0; --k) {
    const RatFun& c = op.coeff(k);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + render(c) + ")";
    if (k >= 1) out += "*Dx";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

using detail::Tok;
using detail::Token;

// `(poly)*Dx^k + ...`: coefficients may be any rational-function expression,
// Dx factors must come last in each product.
class OperatorParser {
public:
  explicit OperatorParser(std::string_view s) : toks_(detail::tokenize(s)) {}

  DiffOperator parse() {
    std::map<int, RatFun> acc = expr();
    expect(Tok::End, "end of input");
    int r = 0;
    for (const auto& [k, c] : acc) r = std::max(r, k);
    std::vector<RatFun> coeffs(static_cast<std::size_t>(r) + 1, RatFun(0));
    for (auto& [k, c] : acc) coeffs[static_cast<std::size_t>(k)] = std::move(c);
    return DiffOperator(std::move(coeffs));
  }

private:
  using Val = std::map<int, RatFun>;  // Dx-power -> coefficient

  static bool pure_scalar(const Val& v) { return v.empty() || (v.size() == 1 && v.begin()->first == 0); }
  static RatFun scalar_of(const Val& v) { return v.empty() ? RatFun(0) : v.begin()->second; }

  const Token& peek() const { return toks_[i_]; }
  Token next() { return toks_[i_++]; }
  void expect(Tok k, const char* what) {
    if (peek().kind != k) throw ParseError(std::string("expected ") + what, peek().pos);
    ++i_;
  }

  Val expr() {
    int sign = 1;
    if (peek().kind == Tok::Plus) {
      next();
    } else if (peek().kind == Tok::Minus) {
      next();
      sign = -1;
    }
    Val acc = term(sign);
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      int s = next().kind == Tok::Minus ? -1 : 1;
      merge(acc, term(s));
    }
    return acc;
  }

  static void merge(Val& into, Val other) {
    for (auto& [k, c] : other) {
      auto [it, inserted] = into.try_emplace(k, RatFun(0));
      it->second += c;
      if (it->second.is_zero()) into.erase(it);
    }
  }

  Val term(int sign) {
    Val acc = factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      bool div = next().kind == Tok::Slash;
      std::size_t pos = peek().pos;
      Val f = factor();
      auto is_constant = [](const RatFun& c) { return c.is_polynomial() && c.num().degree() <= 0; };
      if (div) {
        if (!pure_scalar(f)) throw ParseError("cannot divide by a Dx term", pos);
        RatFun s = scalar_of(f);
        for (auto& [k, c] : acc) c /= s;
      } else if (pure_scalar(acc)) {
        RatFun s = scalar_of(acc);
        for (auto& [k, c] : f) c *= s;
        acc = std::move(f);
      } else if (f.size() == 1 && is_constant(f.begin()->second)) {
        // a constant-coefficient Dx power commutes past the accumulated coefficients
        auto [dk, dc] = *f.begin();
        Val shifted;
        for (auto& [k, c] : acc) shifted.emplace(k + dk, c * dc);
        acc = std::move(shifted);
      } else {
        throw ParseError("Dx factors must come last in a product", pos);
      }
    }
    if (sign < 0)
      for (auto& [k, c] : acc) c = -c;
    return acc;
  }

  Val factor() {
    Val base = primary();
    if (peek().kind == Tok::Caret) {
      std::size_t pos = peek().pos;
      next();
      long e = exponent();
      if (pure_scalar(base)) {
        Val r;
        r.emplace(0, scalar_of(base).pow(e));
        return r;
      }
      if (base.size() == 1 && base.begin()->second == RatFun(1)) {
        if (e < 0) throw ParseError("negative Dx power", pos);
        Val r;
        r.emplace(base.begin()->first * static_cast<int>(e), RatFun(1));
        return r;
      }
      throw ParseError("cannot exponentiate an operator sum", pos);
    }
    return base;
  }

  long exponent() {
    long sign = 1;
    if (peek().kind == Tok::Minus) {
      next();
      sign = -1;
    }
    if (peek().kind != Tok::Integer) throw ParseError("expected integer exponent", peek().pos);
    return sign * std::stol(next().text);
  }

  Val primary() {
    const Token& t = peek();
    Val v;
    switch (t.kind) {
      case Tok::Integer:
        v.emplace(0, RatFun(GaussianRational(Rational(Int(next().text)))));
        return v;
      case Tok::X:
        next();
        v.emplace(0, RatFun::x());
        return v;
      case Tok::I:
        next();
        v.emplace(0, RatFun(GaussianRational::i()));
        return v;
      case Tok::Dx:
        next();
        v.emplace(1, RatFun(1));
        return v;
      case Tok::LParen: {
        next();
        Val inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        throw ParseError("expected number, 'x', 'i', 'Dx' or '('", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

DiffOperator operator_from_text(std::string_view text) { return OperatorParser(text).parse(); }

}  // namespace holopow
