#include "dualruled/error.hpp"

namespace dualruled {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroRealPart: return "ZeroRealPart";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ZeroRealVector: return "ZeroRealVector";
    case ErrorCode::ParallelLines: return "ParallelLines";
    case ErrorCode::NotUnitDirection: return "NotUnitDirection";
    case ErrorCode::NotDualUnit: return "NotDualUnit";
    case ErrorCode::SingularIndicatrix: return "SingularIndicatrix";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::GridTooSmall: return "GridTooSmall";
    case ErrorCode::DegenerateSpeed: return "DegenerateSpeed";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::InvalidCurve: return "InvalidCurve";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace dualruled
