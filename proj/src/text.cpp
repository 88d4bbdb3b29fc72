#include "holopow/text.hpp"

#include <algorithm>
#include <map>

#include "lexer.hpp"

namespace holopow {

namespace {

using detail::Tok;
using detail::Token;

class ExprParser {
public:
  explicit ExprParser(std::string_view s) : toks_(detail::tokenize(s)) {}

  RatFun parse() {
    RatFun v = expr();
    expect(Tok::End, "end of input");
    return v;
  }

private:
  const Token& peek() const { return toks_[i_]; }
  Token next() { return toks_[i_++]; }
  void expect(Tok k, const char* what) {
    if (peek().kind != k) throw ParseError(std::string("expected ") + what, peek().pos);
    ++i_;
  }

  RatFun expr() {
    int sign = 1;
    if (peek().kind == Tok::Plus) {
      next();
    } else if (peek().kind == Tok::Minus) {
      next();
      sign = -1;
    }
    RatFun acc = term();
    if (sign < 0) acc = -acc;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = next().kind == Tok::Minus;
      RatFun t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  RatFun term() {
    RatFun acc = factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      bool div = next().kind == Tok::Slash;
      RatFun f = factor();
      acc = div ? acc / f : acc * f;
    }
    return acc;
  }

  RatFun factor() {
    RatFun base = primary();
    if (peek().kind == Tok::Caret) {
      next();
      base = base.pow(exponent());
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

  RatFun primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Integer:
        return RatFun(GaussianRational(Rational(Int(next().text))));
      case Tok::X:
        next();
        return RatFun::x();
      case Tok::I:
        next();
        return RatFun(GaussianRational::i());
      case Tok::LParen: {
        next();
        RatFun v = expr();
        expect(Tok::RParen, "')'");
        return v;
      }
      default:
        throw ParseError("expected number, 'x', 'i' or '('", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

// --- rendering ---

bool display_negative(const GaussianRational& z) {
  if (z.im().is_zero()) return z.re().sign() < 0;
  if (z.re().is_zero()) return z.im().sign() < 0;
  return false;
}

// Coefficient as it appears in front of `*x^k`; assumes display_negative was
// already factored out by the caller.
std::string coeff_str(const GaussianRational& z) {
  if (z.im().is_zero()) return z.re().str();
  if (z.re().is_zero()) {
    Rational a = z.im().abs();
    std::string s = a.is_one() ? "i" : a.str() + "*i";
    return (z.im().sign() < 0 ? "-" : "") + s;
  }
  return z.str();  // parenthesized mixed form
}

std::string power_str(int e) {
  if (e == 1) return "x";
  return "x^" + std::to_string(e);
}

std::string render_terms(const std::map<int, GaussianRational>& terms) {
  if (terms.empty()) return "0";
  bool has_negative_power = terms.begin()->first < 0;
  std::vector<std::pair<int, GaussianRational>> ordered(terms.begin(), terms.end());
  if (has_negative_power) std::reverse(ordered.begin(), ordered.end());

  std::string out;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    GaussianRational v = c;
    bool neg = display_negative(v);
    if (neg) v = -v;
    std::string body;
    if (e == 0) {
      body = coeff_str(v);
    } else if (v.is_one()) {
      body = power_str(e);
    } else {
      body = coeff_str(v) + "*" + power_str(e);
    }
    if (first) {
      out += (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

std::map<int, GaussianRational> poly_terms(const Poly& p, int offset) {
  std::map<int, GaussianRational> m;
  for (int k = 0; k <= p.degree(); ++k) {
    GaussianRational c = p.coeff(k);
    if (!c.is_zero()) m[k + offset] = c;
  }
  return m;
}

}  // namespace

RatFun parse_rational_function(std::string_view text) { return ExprParser(text).parse(); }

GaussianRational parse_scalar(std::string_view text) {
  RatFun f = parse_rational_function(text);
  if (!f.is_polynomial() || f.num().degree() > 0)
    throw ParseError("expected a scalar value", 0);
  return f.num().coeff(0);
}

Laurent parse_laurent(std::string_view text) {
  RatFun f = parse_rational_function(text);
  auto l = f.to_laurent();
  if (!l) throw ParseError("expected a Laurent polynomial (monomial denominator)", 0);
  return *l;
}

std::string render(const Rational& r) { return r.str(); }
std::string render(const GaussianRational& z) { return z.str(); }

std::string render(const Poly& p) { return render_terms(poly_terms(p, 0)); }

std::string render(const Laurent& p) { return render_terms(poly_terms(p.poly(), p.offset())); }

std::string render(const RatFun& f) {
  if (f.is_polynomial()) return render(f.num());
  if (auto l = f.to_laurent()) return render(*l);
  return "(" + render(f.num()) + ")/(" + render(f.den()) + ")";
}

}  // namespace holopow
