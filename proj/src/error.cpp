#include "toricbound/error.hpp"

namespace toricbound {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kRedundantCover: return "RedundantCover";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kDuplicateLabel: return "DuplicateLabel";
    case ErrorCode::kEnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorCode::kPointOutsidePolytope: return "PointOutsidePolytope";
    case ErrorCode::kDegenerateSimplex: return "DegenerateSimplex";
    case ErrorCode::kNotBalanced: return "NotBalanced";
    case ErrorCode::kNotFullDimensional: return "NotFullDimensional";
    case ErrorCode::kMissingFolding: return "MissingFolding";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kUndecidedAtScale: return "UndecidedAtScale";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kNotSquarefree: return "NotSquarefree";
    case ErrorCode::kNotSeparating: return "NotSeparating";
    case ErrorCode::kDimensionUnsupported: return "DimensionUnsupported";
    case ErrorCode::kNonGenericSystem: return "NonGenericSystem";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kNonGenericTarget: return "NonGenericTarget";
    case ErrorCode::kParityMismatch: return "ParityMismatch";
    case ErrorCode::kScaleExceeded: return "ScaleExceeded";
    case ErrorCode::kUnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::kInvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace toricbound
