#include "steiner/error.hpp"

namespace steiner {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EqualPoints: return "EqualPoints";
    case ErrorCode::LineInsideHyperplane: return "LineInsideHyperplane";
    case ErrorCode::SymmetricDesign: return "SymmetricDesign";
    case ErrorCode::NonIntegral: return "NonIntegral";
    case ErrorCode::NotStronglyRegular: return "NotStronglyRegular";
    case ErrorCode::IrrationalEigenvalues: return "IrrationalEigenvalues";
    case ErrorCode::NotAnEigenvalue: return "NotAnEigenvalue";
    case ErrorCode::PointOnLine: return "PointOnLine";
    case ErrorCode::LinesNotSkew: return "LinesNotSkew";
    case ErrorCode::NotCoplanar3Flat: return "NotCoplanar3Flat";
    case ErrorCode::DependentVectors: return "DependentVectors";
    case ErrorCode::WrongCount: return "WrongCount";
    case ErrorCode::ZeroFunction: return "ZeroFunction";
    case ErrorCode::NotAnEigenfunction: return "NotAnEigenfunction";
    case ErrorCode::HyperplaneHitsLine: return "HyperplaneHitsLine";
    case ErrorCode::NotOptimal: return "NotOptimal";
    case ErrorCode::NotEquitable: return "NotEquitable";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::NotTwoValued: return "NotTwoValued";
    case ErrorCode::BadDecomposition: return "BadDecomposition";
    case ErrorCode::EigenvalueClash: return "EigenvalueClash";
    case ErrorCode::NotSignFunction: return "NotSignFunction";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace steiner
