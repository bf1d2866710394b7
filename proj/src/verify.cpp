#include "ladget/verify.hpp"

namespace ladget {

bool VerificationReport::passed() const noexcept {
  if (structural_gated && !structural.pass) return false;
  if (!universality || !universality->pass) return false;
  if (!consistency || !consistency->pass || !classification) return false;
  if (classification->degenerate) return false;
  return !target || classification->matches(*target);
}

VerificationReport verify_ladget(const GadgetConfig& cfg, std::optional<FunctionName> target, VerifyOptions options) {
  cfg.validate();
  VerificationReport report;
  report.target = target;
  report.structural = structural_filter(cfg, options.minimal_mode);
  report.structural_gated = options.minimal_mode;
  if (report.structural_gated && !report.structural.pass) return report;

  report.universality = check_universality(cfg);
  if (!report.universality->pass) return report;

  report.consistency = check_consistency(cfg);
  if (!report.consistency->pass) return report;

  report.classification = classify(*report.consistency->table);
  return report;
}

}  // namespace ladget
