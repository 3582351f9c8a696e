#include "hbspace/error.hpp"

namespace hb {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::GridTooSmall: return "GridTooSmall";
    case ErrorCode::SingularDiagonal: return "SingularDiagonal";
    case ErrorCode::NonRealLeadingCoefficient: return "NonRealLeadingCoefficient";
    case ErrorCode::NotLogIntegrable: return "NotLogIntegrable";
    case ErrorCode::NotInUnitBall: return "NotInUnitBall";
    case ErrorCode::OutsideDisk: return "OutsideDisk";
    case ErrorCode::NotContraction: return "NotContraction";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ResidualTooLarge: return "ResidualTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

bool is_numerical(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularDiagonal:
    case ErrorCode::NotContraction:
    case ErrorCode::BudgetExceeded:
    case ErrorCode::ResidualTooLarge:
      return true;
    default:
      return false;
  }
}

}  // namespace hb
