#pragma once

#include <Eigen/Core>

#include "holopow/rational.hpp"
#include "holopow/rational_function.hpp"

namespace Eigen {

template <>
struct NumTraits<holopow::Rational> {
  typedef holopow::Rational Real;
  typedef holopow::Rational NonInteger;
  typedef holopow::Rational Nested;
  typedef holopow::Rational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40
  };
  static inline Real epsilon() { return holopow::Rational(0); }
  static inline Real dummy_precision() { return holopow::Rational(0); }
  static inline int digits10() { return 0; }
};

// Treated as a plain field element (no Eigen-side conjugation semantics).
template <>
struct NumTraits<holopow::GaussianRational> {
  typedef holopow::GaussianRational Real;
  typedef holopow::GaussianRational NonInteger;
  typedef holopow::GaussianRational Nested;
  typedef holopow::GaussianRational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 80,
    MulCost = 160
  };
  static inline Real epsilon() { return holopow::GaussianRational(0); }
  static inline Real dummy_precision() { return holopow::GaussianRational(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<holopow::RatFun> {
  typedef holopow::RatFun Real;
  typedef holopow::RatFun NonInteger;
  typedef holopow::RatFun Nested;
  typedef holopow::RatFun Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 64,
    AddCost = 1000,
    MulCost = 1000
  };
  static inline Real epsilon() { return holopow::RatFun(0); }
  static inline Real dummy_precision() { return holopow::RatFun(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace holopow {

using GRatMatrix = Eigen::Matrix<GaussianRational, Eigen::Dynamic, Eigen::Dynamic>;
using GRatVector = Eigen::Matrix<GaussianRational, Eigen::Dynamic, 1>;
using RatFunMatrix = Eigen::Matrix<RatFun, Eigen::Dynamic, Eigen::Dynamic>;
using RatFunVector = Eigen::Matrix<RatFun, Eigen::Dynamic, 1>;

}  // namespace holopow
