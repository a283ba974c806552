#include "siegel/error.hpp"

namespace siegel {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonIntegerEntries: return "NonIntegerEntries";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::NotSymplectic: return "NotSymplectic";
    case ErrorCode::NotInImage: return "NotInImage";
    case ErrorCode::NotInLocus: return "NotInLocus";
    case ErrorCode::NotInGroup: return "NotInGroup";
    case ErrorCode::MalformedBlockPattern: return "MalformedBlockPattern";
    case ErrorCode::SingularDenominator: return "SingularDenominator";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::NoMatch: return "NoMatch";
    case ErrorCode::MultipleMatches: return "MultipleMatches";
    case ErrorCode::IterationLimit: return "IterationLimit";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ModeMismatch: return "ModeMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::TableError: return "TableError";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::NonIntegerPullback: return "NonIntegerPullback";
  }
  return "Unknown";
}

}  // namespace siegel
