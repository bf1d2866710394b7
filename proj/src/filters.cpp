#include "ladget/filters.hpp"

#include <array>

namespace ladget {
namespace {

constexpr std::array<std::string_view, kRuleCount> kRuleNames = {
    "IN_ADJ", "ANCHOR_IN_ADJ", "TRIPLE_NEIGHBOR", "OUT_ANCHOR_ADJ", "OUT_DEGREE", "INTERNAL_DEGREE", "INPUT_DEGREE",
};

/// Calls report(rule) for each violated, enabled rule in order; stops as
/// soon as report returns false.
template <typename Report>
void scan_rules(const Graph& g, const RoleLabeling& roles, bool minimal_mode, RuleSet rules, Report&& report) {
  VertexSet inputs = 0;
  for (Vertex v : roles.inputs) inputs |= bit(v);
  const VertexSet anchor = bit(roles.anchor);
  const VertexSet internal = g.all_vertices() & ~(inputs | anchor | bit(roles.output));

  if (rules.contains(Rule::InputAdjacent)) {
    for (Vertex v : roles.inputs) {
      if (g.row(v) & inputs) {
        if (!report(Rule::InputAdjacent)) return;
        break;
      }
    }
  }
  if (rules.contains(Rule::AnchorInputAdjacent) && (g.row(roles.anchor) & inputs)) {
    if (!report(Rule::AnchorInputAdjacent)) return;
  }
  if (rules.contains(Rule::TripleNeighbor)) {
    const VertexSet sources = inputs | anchor;
    for (VertexSet r = internal; r != 0; r &= r - 1) {
      if (std::popcount(g.row(std::countr_zero(r)) & sources) >= 3) {
        if (!report(Rule::TripleNeighbor)) return;
        break;
      }
    }
  }
  if (rules.contains(Rule::OutputAnchorAdjacent) && g.has_edge(roles.anchor, roles.output)) {
    if (!report(Rule::OutputAnchorAdjacent)) return;
  }
  if (rules.contains(Rule::OutputDegree) && g.degree(roles.output) < 2) {
    if (!report(Rule::OutputDegree)) return;
  }
  if (minimal_mode && rules.contains(Rule::InternalDegree)) {
    for (VertexSet r = internal; r != 0; r &= r - 1) {
      if (g.degree(std::countr_zero(r)) < 3) {
        if (!report(Rule::InternalDegree)) return;
        break;
      }
    }
  }
  if (rules.contains(Rule::InputDegree)) {
    for (Vertex v : roles.inputs) {
      if (g.degree(v) < 2) {
        report(Rule::InputDegree);
        return;
      }
    }
  }
}

}  // namespace

std::string_view to_string(Rule rule) noexcept { return kRuleNames[static_cast<std::size_t>(rule)]; }

std::optional<Rule> parse_rule(std::string_view text) {
  for (std::size_t i = 0; i < kRuleNames.size(); ++i) {
    if (kRuleNames[i] == text) return static_cast<Rule>(i);
  }
  return std::nullopt;
}

FilterVerdict structural_filter(const GadgetConfig& cfg, bool minimal_mode, RuleSet rules) {
  cfg.validate();
  FilterVerdict verdict;
  scan_rules(cfg.graph, cfg.roles, minimal_mode, rules, [&](Rule r) {
    verdict.violations.push_back(r);
    return true;
  });
  verdict.pass = verdict.violations.empty();
  return verdict;
}

bool passes_structural(const Graph& g, const RoleLabeling& roles, bool minimal_mode, RuleSet rules) noexcept {
  bool ok = true;
  scan_rules(g, roles, minimal_mode, rules, [&](Rule) {
    ok = false;
    return false;
  });
  return ok;
}

}  // namespace ladget
