#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace steiner {

enum class ErrorCode {
  NonPrime,
  LimitExceeded,
  DivisionByZero,
  MixedFields,
  DimensionMismatch,
  EqualPoints,
  LineInsideHyperplane,
  SymmetricDesign,
  NonIntegral,
  NotStronglyRegular,
  IrrationalEigenvalues,
  NotAnEigenvalue,
  PointOnLine,
  LinesNotSkew,
  NotCoplanar3Flat,
  DependentVectors,
  WrongCount,
  ZeroFunction,
  NotAnEigenfunction,
  HyperplaneHitsLine,
  NotOptimal,
  NotEquitable,
  Inconsistent,
  NotTwoValued,
  BadDecomposition,
  EigenvalueClash,
  NotSignFunction,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace steiner
