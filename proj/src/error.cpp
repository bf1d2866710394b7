#include "ladget/error.hpp"

namespace ladget {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::InvalidGraph6: return "InvalidGraph6";
    case ErrorCode::SizeUnsupported: return "SizeUnsupported";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::InvalidRoles: return "InvalidRoles";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::GraphTooSmall: return "GraphTooSmall";
    case ErrorCode::TooManyInputs: return "TooManyInputs";
    case ErrorCode::OrderOverflow: return "OrderOverflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace ladget
