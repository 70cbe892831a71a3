#pragma once

#include <stdexcept>
#include <string>

namespace dualruled {

enum class ErrorCode {
  ZeroRealPart,        // divisor is a pure dual number
  DomainError,         // analytic kernel evaluated outside its domain
  ZeroRealVector,      // dual vector with vanishing real part
  ParallelLines,       // dual angle has no extractable dual part
  NotUnitDirection,
  NotDualUnit,
  SingularIndicatrix,  // real indicatrix stalls
  OutOfDomain,
  GridTooSmall,
  DegenerateSpeed,     // ẽg̃ construction at the pole γ = 1
  HypothesisNotMet,
  InvalidCurve,
  InvalidArgument,
  Parse,
  Io,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dualruled
