#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ladget/gadget.hpp"

namespace ladget {

/// Necessary structural conditions for a ladget, in evaluation order.
enum class Rule : std::uint8_t {
  InputAdjacent,        // IN_ADJ: two inputs share an edge
  AnchorInputAdjacent,  // ANCHOR_IN_ADJ
  TripleNeighbor,       // TRIPLE_NEIGHBOR: internal vertex sees >= 3 of inputs + anchor
  OutputAnchorAdjacent, // OUT_ANCHOR_ADJ
  OutputDegree,         // OUT_DEGREE: deg(theta) < 2
  InternalDegree,       // INTERNAL_DEGREE: internal vertex of degree < 3 (minimal only)
  InputDegree,          // INPUT_DEGREE: input of degree < 2
};

inline constexpr int kRuleCount = 7;

std::string_view to_string(Rule rule) noexcept;
std::optional<Rule> parse_rule(std::string_view text);

/// Bitset of enabled rules.
class RuleSet {
 public:
  static RuleSet all() { return RuleSet((1U << kRuleCount) - 1); }
  static RuleSet none() { return RuleSet(0); }

  bool contains(Rule r) const noexcept { return (bits_ >> static_cast<int>(r)) & 1U; }
  RuleSet with(Rule r) const noexcept { return RuleSet(bits_ | (1U << static_cast<int>(r))); }
  RuleSet without(Rule r) const noexcept { return RuleSet(bits_ & ~(1U << static_cast<int>(r))); }

  friend bool operator==(RuleSet, RuleSet) = default;

 private:
  explicit RuleSet(std::uint32_t bits) : bits_(bits) {}
  std::uint32_t bits_;
};

struct FilterVerdict {
  bool pass = true;
  std::vector<Rule> violations;
};

/// Checks every enabled rule and reports all violations. INTERNAL_DEGREE is
/// only evaluated when minimal_mode is set.
FilterVerdict structural_filter(const GadgetConfig& cfg, bool minimal_mode, RuleSet rules = RuleSet::all());

/// Short-circuiting form for the search loop.
bool passes_structural(const Graph& g, const RoleLabeling& roles, bool minimal_mode,
                       RuleSet rules = RuleSet::all()) noexcept;

}  // namespace ladget
