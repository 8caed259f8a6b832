#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace anglespread {

enum class ErrorKind {
  EmptyInput,
  NonFiniteCoordinate,
  NegativeCoordinate,
  BadSum,
  ZeroVector,
  DimensionMismatch,
  BadDimension,
  UniformInput,
  InvalidProfile,
  DegenerateDenominator,
  InfeasiblePair,
  OutOfDomain,
  InvalidArgument,
  TooLarge,
  ToleranceNotMet,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every domain failure raised by the library carries its kind so callers
// (notably the CLI) can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace anglespread
