#include "anglespread/error.hpp"

namespace anglespread {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NonFiniteCoordinate: return "NonFiniteCoordinate";
    case ErrorKind::NegativeCoordinate: return "NegativeCoordinate";
    case ErrorKind::BadSum: return "BadSum";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::UniformInput: return "UniformInput";
    case ErrorKind::InvalidProfile: return "InvalidProfile";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::InfeasiblePair: return "InfeasiblePair";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ToleranceNotMet: return "ToleranceNotMet";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace anglespread
