#include "ladget/gadget.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ladget {
namespace {

std::size_t ipow(int base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

PartialAssignment fixed_inputs(const GadgetConfig& cfg, std::span<const Color> tuple) {
  PartialAssignment fixed;
  fixed.fix(cfg.roles.anchor, 0);
  for (std::size_t j = 0; j < tuple.size(); ++j) fixed.fix(cfg.roles.inputs[j], tuple[j]);
  return fixed;
}

std::uint32_t pattern_of(std::span<const Color> tuple) {
  std::uint32_t p = 0;
  for (Color c : tuple) p = (p << 1) | (c != 0 ? 1U : 0U);
  return p;
}

std::uint32_t pattern_of_index(std::size_t index, int arity, int k) {
  std::uint32_t p = 0;
  for (int j = 0; j < arity; ++j) {
    if (index % static_cast<std::size_t>(k) != 0) p |= std::uint32_t{1} << j;
    index /= static_cast<std::size_t>(k);
  }
  return p;
}

}  // namespace

void GadgetConfig::validate() const {
  validate_roles(graph, roles);
  if (k < 3 || k > kMaxVertices) throw Error(ErrorCode::InvalidArgument, "color count must be in 3..32");
  if (arity() > kMaxArity) {
    throw Error(ErrorCode::InvalidArgument, "arity " + std::to_string(arity()) + " exceeds " + std::to_string(kMaxArity));
  }
}

std::string format_color_set(ColorSet set) {
  std::ostringstream os;
  if (std::popcount(set) == 1) {
    os << std::countr_zero(set);
    return os.str();
  }
  os << '{';
  bool first = true;
  for (ColorSet r = set; r != 0; r &= r - 1) {
    os << (first ? "" : ",") << std::countr_zero(r);
    first = false;
  }
  os << '}';
  return os.str();
}

ColorMapping::ColorMapping(int arity, int k) : arity_(arity), k_(k), entries_(ipow(k, arity), 0) {}

std::size_t ColorMapping::index_of(std::span<const Color> tuple) const {
  if (static_cast<int>(tuple.size()) != arity_) throw Error(ErrorCode::ArityMismatch, "tuple length differs from arity");
  std::size_t index = 0;
  for (Color c : tuple) {
    if (c < 0 || c >= k_) throw Error(ErrorCode::InvalidArgument, "tuple color out of range");
    index = index * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c);
  }
  return index;
}

std::vector<Color> ColorMapping::tuple_of(std::size_t index) const {
  std::vector<Color> tuple(static_cast<std::size_t>(arity_), 0);
  for (int j = arity_ - 1; j >= 0; --j) {
    tuple[static_cast<std::size_t>(j)] = static_cast<Color>(index % static_cast<std::size_t>(k_));
    index /= static_cast<std::size_t>(k_);
  }
  return tuple;
}

std::string TruthTable::to_string() const {
  std::string s;
  for (std::uint32_t p = 0; p < patterns(); ++p) s.push_back(value(p) ? '1' : '0');
  return s;
}

TruthTable TruthTable::from_string(std::string_view text) {
  TruthTable tt;
  while ((std::size_t{1} << tt.arity) < text.size()) ++tt.arity;
  if ((std::size_t{1} << tt.arity) != text.size() || tt.arity > kMaxArity) {
    throw Error(ErrorCode::InvalidArgument, "truth table length must be 2, 4 or 8");
  }
  for (std::size_t p = 0; p < text.size(); ++p) {
    if (text[p] != '0' && text[p] != '1') throw Error(ErrorCode::InvalidArgument, "truth table must be 0/1 characters");
    if (text[p] == '1') tt.bits |= std::uint32_t{1} << p;
  }
  return tt;
}

std::string_view to_string(FunctionName name) noexcept {
  switch (name) {
    case FunctionName::Not: return "NOT";
    case FunctionName::And: return "AND";
    case FunctionName::Or: return "OR";
    case FunctionName::Nand: return "NAND";
    case FunctionName::Nor: return "NOR";
    case FunctionName::Xor: return "XOR";
    case FunctionName::Xnor: return "XNOR";
    case FunctionName::Identity: return "MOV";
    case FunctionName::Constant: return "CONST";
    case FunctionName::Other: return "OTHER";
  }
  return "OTHER";
}

std::optional<FunctionName> parse_function_name(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  for (auto name : {FunctionName::Not, FunctionName::And, FunctionName::Or, FunctionName::Nand, FunctionName::Nor,
                    FunctionName::Xor, FunctionName::Xnor, FunctionName::Identity, FunctionName::Constant,
                    FunctionName::Other}) {
    if (upper == to_string(name)) return name;
  }
  return std::nullopt;
}

TruthTable truth_table_of(FunctionName name, int arity) {
  if (arity < 1 || arity > kMaxArity) throw Error(ErrorCode::InvalidArgument, "arity out of range");
  TruthTable tt{arity, 0};
  const std::uint32_t all = tt.patterns() - 1;
  const bool unary_only = name == FunctionName::Not || name == FunctionName::Identity;
  const bool nary_only = name == FunctionName::And || name == FunctionName::Or || name == FunctionName::Nand ||
                         name == FunctionName::Nor || name == FunctionName::Xor || name == FunctionName::Xnor;
  if ((unary_only && arity != 1) || (nary_only && arity < 2) || (!unary_only && !nary_only)) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(to_string(name)) + " has no truth table at arity " + std::to_string(arity));
  }
  for (std::uint32_t p = 0; p <= all; ++p) {
    bool v = false;
    switch (name) {
      case FunctionName::Identity: v = p == 1; break;
      case FunctionName::Not: v = p == 0; break;
      case FunctionName::And: v = p == all; break;
      case FunctionName::Nand: v = p != all; break;
      case FunctionName::Or: v = p != 0; break;
      case FunctionName::Nor: v = p == 0; break;
      case FunctionName::Xor: v = std::popcount(p) % 2 == 1; break;
      case FunctionName::Xnor: v = std::popcount(p) % 2 == 0; break;
      default: break;
    }
    if (v) tt.bits |= std::uint32_t{1} << p;
  }
  return tt;
}

BooleanFunction classify(const TruthTable& tt) {
  BooleanFunction f;
  f.arity = tt.arity;
  for (int j = 0; j < tt.arity; ++j) {
    const std::uint32_t flip = std::uint32_t{1} << (tt.arity - 1 - j);
    for (std::uint32_t p = 0; p < tt.patterns(); ++p) {
      if (tt.value(p) != tt.value(p ^ flip)) {
        f.dependency_mask |= std::uint32_t{1} << j;
        break;
      }
    }
  }
  const std::uint32_t every = (std::uint32_t{1} << tt.arity) - 1;
  f.degenerate = f.dependency_mask != every;
  if (f.dependency_mask == 0) {
    f.name = FunctionName::Constant;
    return f;
  }
  if (f.degenerate) return f;

  const auto candidates = tt.arity == 1
                              ? std::vector<FunctionName>{FunctionName::Identity, FunctionName::Not}
                              : std::vector<FunctionName>{FunctionName::And, FunctionName::Or, FunctionName::Nand,
                                                          FunctionName::Nor, FunctionName::Xor, FunctionName::Xnor};
  for (FunctionName name : candidates) {
    if (truth_table_of(name, tt.arity) == tt) {
      f.name = name;
      break;
    }
  }
  return f;
}

ColorMapping compute_mapping(const GadgetConfig& cfg) {
  cfg.validate();
  ColorMapping mapping(cfg.arity(), cfg.k);
  for (std::size_t index = 0; index < mapping.size(); ++index) {
    const auto tuple = mapping.tuple_of(index);
    PartialAssignment fixed = fixed_inputs(cfg, tuple);
    fixed.fix(cfg.roles.output, 0);
    for (Color out = 0; out < cfg.k; ++out) {
      fixed.pairs.back().second = out;
      if (exists_coloring(cfg.graph, fixed, cfg.k)) mapping[index] |= ColorSet{1} << out;
    }
  }
  return mapping;
}

ColorMapping compute_mapping_by_enumeration(const GadgetConfig& cfg) {
  ColorMapping mapping(cfg.arity(), cfg.k);
  const PartialAssignment fixed{{cfg.roles.anchor, 0}};
  const auto& inputs = cfg.roles.inputs;
  const auto output = static_cast<std::size_t>(cfg.roles.output);
  const auto k = static_cast<std::size_t>(cfg.k);
  visit_colorings(cfg.graph, fixed, cfg.k, [&](const Coloring& c) {
    std::size_t index = 0;
    for (Vertex v : inputs) index = index * k + static_cast<std::size_t>(c[static_cast<std::size_t>(v)]);
    mapping[index] |= ColorSet{1} << c[output];
    return true;
  });
  return mapping;
}

UniversalityResult check_universality(const GadgetConfig& cfg) {
  cfg.validate();
  const ColorMapping shape(cfg.arity(), cfg.k);
  for (std::size_t index = 0; index < shape.size(); ++index) {
    auto tuple = shape.tuple_of(index);
    if (!exists_coloring(cfg.graph, fixed_inputs(cfg, tuple), cfg.k)) return {false, std::move(tuple)};
  }
  return {true, std::nullopt};
}

MappingVerdict judge_mapping(const ColorMapping& mapping) {
  MappingVerdict verdict;
  verdict.universal = true;
  const std::uint32_t patterns = std::uint32_t{1} << mapping.arity();
  std::vector<bool> seen_false(patterns, false);
  std::vector<bool> seen_true(patterns, false);
  for (std::size_t index = 0; index < mapping.size(); ++index) {
    const ColorSet out = mapping[index];
    if (out == 0) {
      verdict.universal = false;
      return verdict;
    }
    const auto p = pattern_of_index(index, mapping.arity(), mapping.colors());
    if (out & 1U) seen_false[p] = true;
    if (out & ~ColorSet{1}) seen_true[p] = true;
  }
  TruthTable tt{mapping.arity(), 0};
  for (std::uint32_t p = 0; p < patterns; ++p) {
    if (seen_false[p] && seen_true[p]) return verdict;
    if (seen_true[p]) tt.bits |= std::uint32_t{1} << p;
  }
  verdict.consistent = true;
  verdict.table = tt;
  return verdict;
}

ConsistencyResult check_consistency(const GadgetConfig& cfg) {
  cfg.validate();
  const ColorMapping mapping = compute_mapping(cfg);
  const MappingVerdict verdict = judge_mapping(mapping);
  if (!verdict.universal) {
    throw Error(ErrorCode::PreconditionViolated, "consistency is only defined once universality holds");
  }
  if (verdict.consistent) return {true, verdict.table, std::nullopt};

  // Find the first pattern where theta can be both false and true, and pull
  // one concrete coloring for each side.
  const std::uint32_t patterns = std::uint32_t{1} << mapping.arity();
  for (std::uint32_t p = 0; p < patterns; ++p) {
    std::optional<std::vector<Color>> false_tuple;
    std::optional<std::vector<Color>> true_tuple;
    Color true_color = 0;
    for (std::size_t index = 0; index < mapping.size(); ++index) {
      auto tuple = mapping.tuple_of(index);
      if (pattern_of(tuple) != p) continue;
      const ColorSet out = mapping[index];
      if (!false_tuple && (out & 1U)) false_tuple = tuple;
      if (!true_tuple && (out & ~ColorSet{1})) {
        true_tuple = tuple;
        true_color = std::countr_zero(out & ~ColorSet{1});
      }
    }
    if (!false_tuple || !true_tuple) continue;

    auto first_coloring = [&](const std::vector<Color>& tuple, Color out) {
      PartialAssignment fixed = fixed_inputs(cfg, tuple);
      fixed.fix(cfg.roles.output, out);
      Coloring found;
      visit_colorings(cfg.graph, fixed, cfg.k, [&](const Coloring& c) {
        found = c;
        return false;
      });
      return found;
    };
    ConsistencyWitness w{*false_tuple, *true_tuple, first_coloring(*false_tuple, 0),
                         first_coloring(*true_tuple, true_color)};
    return {false, std::nullopt, std::move(w)};
  }
  return {false, std::nullopt, std::nullopt};
}

}  // namespace ladget
