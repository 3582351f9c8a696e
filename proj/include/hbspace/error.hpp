#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hb {

enum class ErrorCode {
  InvalidArgument,
  ZeroConstantTerm,
  GridTooSmall,
  SingularDiagonal,
  NonRealLeadingCoefficient,
  NotLogIntegrable,
  NotInUnitBall,
  OutsideDisk,
  NotContraction,
  BudgetExceeded,
  ResidualTooLarge,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// True for failures that a larger degree or finer grid may cure, as opposed
/// to invalid user input. The CLI maps these to exit code 2.
bool is_numerical(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::ParseError,
              what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hb
