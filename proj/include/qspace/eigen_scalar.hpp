#pragma once

// Eigen trait specializations so dense Eigen containers can hold exact scalars.

#include <Eigen/Core>

#include "qspace/ratfunc.hpp"
#include "qspace/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<qspace::QScalar> {
  using Real = qspace::QScalar;
  using NonInteger = qspace::QScalar;
  using Literal = qspace::QScalar;
  using Nested = qspace::QScalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64,
  };
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<qspace::QRational> {
  using Real = qspace::QRational;
  using NonInteger = qspace::QRational;
  using Literal = qspace::QRational;
  using Nested = qspace::QRational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 256,
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace qspace {

template <typename S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using QMatrix = Mat<QScalar>;
using RMatrixQ = Mat<QRational>;

/// Exact determinant by Gaussian elimination over the fraction field.
QRational determinant(const RMatrixQ& m);

/// Exact row reduction of [A | B]; returns X with A X = B, or nullopt if inconsistent.
/// Throws Error(singular) when A has a nontrivial kernel.
std::optional<RMatrixQ> solve_exact(RMatrixQ a, RMatrixQ b);

}  // namespace qspace
