#include "ineqlab/error.hpp"

namespace ineqlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateNodes: return "DuplicateNodes";
    case ErrorCode::DomainExceeded: return "DomainExceeded";
    case ErrorCode::DegenerateInterval: return "DegenerateInterval";
    case ErrorCode::SlopeTooSmall: return "SlopeTooSmall";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::SizeOrder: return "SizeOrder";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::SvdFailure: return "SvdFailure";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotInnerProduct: return "NotInnerProduct";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::BadAlpha: return "BadAlpha";
    case ErrorCode::BadP: return "BadP";
    case ErrorCode::NotPsd: return "NotPsd";
    case ErrorCode::NotInPositiveCone: return "NotInPositiveCone";
    case ErrorCode::NegativeDeterminant: return "NegativeDeterminant";
    case ErrorCode::UnknownCheck: return "UnknownCheck";
    case ErrorCode::UnknownFunction: return "UnknownFunction";
    case ErrorCode::BadSpaceSpec: return "BadSpaceSpec";
  }
  return "Unknown";
}

}  // namespace ineqlab
