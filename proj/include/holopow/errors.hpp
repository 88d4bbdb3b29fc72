#pragma once

#include <stdexcept>
#include <string>

namespace holopow {

/// Base class for all recoverable errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid input value (nonpositive parameter, zero operator, bad index, ...).
class DomainError : public Error {
public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Text input that does not match the expression grammar.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

/// Exact linear solve hit a zero pivot column.
class SingularMatrixError : public Error {
public:
  explicit SingularMatrixError(int pivot)
      : Error("matrix is singular (no pivot in column " + std::to_string(pivot) + ")"),
        pivot_index(pivot) {}
  int pivot_index;
};

/// A theorem hypothesis does not hold for the given input; `what()` names the
/// failed inequality.
class HypothesisError : public Error {
public:
  explicit HypothesisError(const std::string& failed)
      : Error("hypothesis violated: " + failed) {}
};

/// Terminating hypergeometric sum hit a nonpositive-integer lower parameter.
class UndefinedParameterError : public Error {
public:
  explicit UndefinedParameterError(const std::string& msg) : Error(msg) {}
};

/// Numeric routine could not reach the requested accuracy.
class ToleranceError : public Error {
public:
  ToleranceError(const std::string& msg, double achieved_error)
      : Error(msg + " (achieved error " + std::to_string(achieved_error) + ")"),
        achieved(achieved_error) {}
  double achieved;
};

/// Evaluation of a rational function at a zero of its denominator.
class PoleError : public Error {
public:
  explicit PoleError(const std::string& msg) : Error(msg) {}
};

}  // namespace holopow
