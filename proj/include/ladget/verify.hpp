#pragma once

#include <optional>

#include "ladget/filters.hpp"
#include "ladget/gadget.hpp"

namespace ladget {

struct VerifyOptions {
  /// Evaluates INTERNAL_DEGREE and turns the structural check into a gate:
  /// a structural violation stops verification and fails the report.
  bool minimal_mode = false;
};

/// Stage results in pipeline order; a stage is empty when an earlier stage
/// stopped the run.
struct VerificationReport {
  FilterVerdict structural;
  bool structural_gated = false;
  std::optional<UniversalityResult> universality;
  std::optional<ConsistencyResult> consistency;
  std::optional<BooleanFunction> classification;
  std::optional<FunctionName> target;

  /// Universality and consistency hold, the function reads every input,
  /// and it matches the target when one was given.
  bool passed() const noexcept;
};

VerificationReport verify_ladget(const GadgetConfig& cfg, std::optional<FunctionName> target = std::nullopt,
                                 VerifyOptions options = {});

}  // namespace ladget
