#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ladget/coloring.hpp"
#include "ladget/graph.hpp"

namespace ladget {

inline constexpr int kMaxArity = 3;

/// A graph with anchor, inputs and output designated, colored with k colors.
/// The anchor is always fixed to color 0 (false); every other color is true.
struct GadgetConfig {
  Graph graph;
  RoleLabeling roles;
  int k = 3;

  int arity() const noexcept { return roles.arity(); }

  /// Throws InvalidRoles / InvalidArgument when roles or k are unusable.
  void validate() const;
};

/// Bitset over colors 0..k-1.
using ColorSet = std::uint32_t;

std::string format_color_set(ColorSet set);

/// Table S^n -> subsets of S. Tuples are indexed lexicographically with the
/// first input most significant.
class ColorMapping {
 public:
  ColorMapping(int arity, int k);

  int arity() const noexcept { return arity_; }
  int colors() const noexcept { return k_; }
  std::size_t size() const noexcept { return entries_.size(); }

  ColorSet& operator[](std::size_t index) { return entries_[index]; }
  ColorSet operator[](std::size_t index) const { return entries_[index]; }
  ColorSet at(std::span<const Color> tuple) const { return entries_[index_of(tuple)]; }

  std::size_t index_of(std::span<const Color> tuple) const;
  std::vector<Color> tuple_of(std::size_t index) const;

  friend bool operator==(const ColorMapping&, const ColorMapping&) = default;

 private:
  int arity_;
  int k_;
  std::vector<ColorSet> entries_;
};

/// Boolean function {0,1}^n -> {0,1}. Pattern p has input j at bit
/// (n - 1 - j), so patterns run (0,0), (0,1), (1,0), (1,1) for n = 2.
struct TruthTable {
  int arity = 0;
  std::uint32_t bits = 0;

  bool value(std::uint32_t pattern) const noexcept { return (bits >> pattern) & 1U; }
  std::uint32_t patterns() const noexcept { return std::uint32_t{1} << arity; }

  /// One character per pattern in pattern order, e.g. "1110" for NAND.
  std::string to_string() const;
  static TruthTable from_string(std::string_view text);

  friend bool operator==(const TruthTable&, const TruthTable&) = default;
};

enum class FunctionName { Not, And, Or, Nand, Nor, Xor, Xnor, Identity, Constant, Other };

std::string_view to_string(FunctionName name) noexcept;
/// Accepts the printed names case-insensitively ("NAND", "mov", ...).
std::optional<FunctionName> parse_function_name(std::string_view text);

/// Truth table of a named function at the given arity (n-ary AND/OR/parity
/// for the binary names). Throws InvalidArgument for names with no table at
/// that arity.
TruthTable truth_table_of(FunctionName name, int arity);

struct BooleanFunction {
  FunctionName name = FunctionName::Other;
  int arity = 0;
  std::uint32_t dependency_mask = 0;  // bit j set iff the function reads input j
  bool degenerate = false;            // some input is ignored

  /// Degenerate functions never match a target.
  bool matches(FunctionName target) const noexcept { return !degenerate && name == target; }
};

BooleanFunction classify(const TruthTable& tt);

/// Output colors reachable for every input tuple, via one existence query
/// per (tuple, output color).
ColorMapping compute_mapping(const GadgetConfig& cfg);

/// Same table, built from a single walk over all colorings with the anchor
/// fixed. Faster on small graphs; used by the search pipeline.
ColorMapping compute_mapping_by_enumeration(const GadgetConfig& cfg);

struct UniversalityResult {
  bool pass = false;
  std::optional<std::vector<Color>> failing_tuple;  // first in lexicographic order
};

UniversalityResult check_universality(const GadgetConfig& cfg);

struct ConsistencyWitness {
  std::vector<Color> tuple_false;  // input colors of the coloring with theta == 0
  std::vector<Color> tuple_true;
  Coloring coloring_false;
  Coloring coloring_true;
};

struct ConsistencyResult {
  bool pass = false;
  std::optional<TruthTable> table;
  std::optional<ConsistencyWitness> witness;
};

/// Collapses input colors to Booleans (0 -> false, anything else -> true)
/// and requires theta's Boolean value to agree across each pattern's
/// colorings. Throws PreconditionViolated when universality does not hold.
ConsistencyResult check_consistency(const GadgetConfig& cfg);

/// Universality / consistency read off a finished mapping, without
/// witnesses. `table` is set only when both hold.
struct MappingVerdict {
  bool universal = false;
  bool consistent = false;
  std::optional<TruthTable> table;
};

MappingVerdict judge_mapping(const ColorMapping& mapping);

}  // namespace ladget
