#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ladget/gadget.hpp"

namespace ladget {

struct SearchOptions {
  std::vector<FunctionName> targets;  // empty: every named function of the arity
  int arity = 2;
  bool inputs_unordered = true;
  bool minimal_mode = false;
  bool filter_enabled = true;
  std::optional<double> sample_rate;  // Bernoulli sampling of configs, in (0, 1]
  std::uint64_t seed = 0;
  int jobs = 1;
  bool strict = true;  // abort on the first malformed graph6 line

  /// Throws InvalidArgument when arity, targets or sample_rate are unusable.
  void validate() const;
  std::vector<FunctionName> effective_targets() const;
};

struct Hit {
  std::string graph6;
  RoleLabeling roles;
  TruthTable table;
  FunctionName function = FunctionName::Other;

  int order() const;
  friend bool operator==(const Hit&, const Hit&) = default;
};

/// Lexicographic on (graph6, anchor, output, inputs).
bool hit_less(const Hit& a, const Hit& b);

/// Counters for one graph order. Merging is associative and commutative.
struct OrderCounters {
  std::uint64_t graphs_seen = 0;
  std::uint64_t configs_enumerated = 0;
  std::uint64_t configs_after_filter = 0;
  std::map<FunctionName, std::uint64_t> hits_raw;
  std::map<FunctionName, std::uint64_t> hits_deduped;

  void merge(const OrderCounters& other);
  friend bool operator==(const OrderCounters&, const OrderCounters&) = default;
};

struct StreamError {
  std::uint64_t line = 0;
  std::string message;
  friend bool operator==(const StreamError&, const StreamError&) = default;
};

struct SearchReport {
  SearchOptions options;
  std::map<int, OrderCounters> per_order;
  std::vector<Hit> hits;          // every raw hit, sorted with hit_less
  std::vector<Hit> hits_deduped;  // one per role-isomorphism class, sorted
  std::vector<StreamError> skipped;
  double elapsed_seconds = 0.0;

  OrderCounters totals() const;
  std::uint64_t deduped_count(FunctionName f) const;

  /// Equality of everything except elapsed time.
  bool same_results(const SearchReport& other) const;
};

/// Every role assignment of distinct vertices: anchor, then output, then the
/// inputs (ascending combinations when unordered, tuples otherwise).
/// Throws GraphTooSmall when g has fewer than arity + 2 vertices.
std::vector<GadgetConfig> enumerate_configs(const Graph& g, const SearchOptions& opts);
std::uint64_t config_count(int order, int arity, bool inputs_unordered);

/// Streams role labelings without materializing configs.
void for_each_roles(int order, int arity, bool inputs_unordered, const std::function<void(const RoleLabeling&)>& visit);

/// One representative per role-isomorphism class (the least under
/// hit_less), returned sorted. Hits of different functions are kept apart.
std::vector<Hit> dedupe_hits(std::span<const Hit> hits, bool inputs_ordered);

struct CheckpointOptions {
  std::string path;                // empty: no checkpointing
  std::uint64_t every_graphs = 10000;
  bool resume = false;
};

/// Runs filter -> mapping -> verdict -> classification over every config of
/// every graph read from `in` (one graph6 record per line). Blank lines are
/// skipped. Malformed lines throw InvalidGraph6 (with line number) in strict
/// mode, otherwise they are recorded in `skipped`.
SearchReport search_stream(std::istream& in, const SearchOptions& opts, const CheckpointOptions& checkpoint = {});

SearchReport search_graphs(std::span<const Graph> graphs, const SearchOptions& opts);

struct RarityRow {
  FunctionName function = FunctionName::Other;
  int order = 0;
  std::uint64_t count_deduped = 0;
  std::uint64_t count_raw = 0;
  std::uint64_t graphs = 0;
  std::uint64_t configs = 0;
  std::uint64_t filtered_configs = 0;
  // Universe size per hit; empty when there are no hits.
  std::optional<double> graphs_per_hit;             // deduped denominator
  std::optional<double> configs_per_hit_deduped;
  std::optional<double> configs_per_hit_raw;
  std::optional<double> filtered_per_hit_deduped;
  std::optional<double> filtered_per_hit_raw;
};

std::vector<RarityRow> rarity_stats(const SearchReport& report);

/// Human-readable summary: counters, hits and the rarity table.
void print_report(std::ostream& out, const SearchReport& report);

}  // namespace ladget
