#pragma once

#include <string>
#include <string_view>

#include "holopow/rational_function.hpp"

namespace holopow {

/// Parses the expression grammar over Q(i)(x): integers, `i`, `x`, `+ - * /`,
/// `^` with integer (possibly negative) exponents, parentheses. Examples:
/// `1+x^-2`, `-3*x^-1 - 1/27*x^-3`, `(1/2 + 3/4*i)*x^2`.
RatFun parse_rational_function(std::string_view text);

/// Parsed value restricted to a scalar; throws ParseError otherwise.
GaussianRational parse_scalar(std::string_view text);

/// Parsed value restricted to a Laurent polynomial; throws ParseError otherwise.
Laurent parse_laurent(std::string_view text);

std::string render(const Rational& r);
std::string render(const GaussianRational& z);

/// Canonical term-per-power rendering, e.g. `9 + 6*x^-2 + 9*x^-4`.
/// Plain polynomials list ascending powers; once negative powers are present
/// terms run from the highest power down.
std::string render(const Poly& p);
std::string render(const Laurent& p);
std::string render(const RatFun& f);

}  // namespace holopow
