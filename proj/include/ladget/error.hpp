#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ladget {

enum class ErrorCode {
  InvalidGraph,
  InvalidGraph6,
  SizeUnsupported,
  ArityMismatch,
  InvalidRoles,
  TooLarge,
  PreconditionViolated,
  UnknownFixture,
  GraphTooSmall,
  TooManyInputs,
  OrderOverflow,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ladget
