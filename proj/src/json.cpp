#include "ladget/json.hpp"

namespace ladget {
namespace {

template <typename T>
nlohmann::json optional_number(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json function_counts(const std::map<FunctionName, std::uint64_t>& counts) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [f, n] : counts) j[std::string(to_string(f))] = n;
  return j;
}

std::map<FunctionName, std::uint64_t> parse_function_counts(const nlohmann::json& j) {
  std::map<FunctionName, std::uint64_t> out;
  for (const auto& [name, n] : j.items()) {
    const auto f = parse_function_name(name);
    if (!f) throw Error(ErrorCode::InvalidArgument, "unknown function name in JSON: " + name);
    out[*f] = n.get<std::uint64_t>();
  }
  return out;
}

}  // namespace

void to_json(nlohmann::json& j, const RoleLabeling& roles) {
  j = {{"anchor", roles.anchor}, {"output", roles.output}, {"inputs", roles.inputs}};
}

void from_json(const nlohmann::json& j, RoleLabeling& roles) {
  roles.anchor = j.at("anchor").get<Vertex>();
  roles.output = j.at("output").get<Vertex>();
  roles.inputs = j.at("inputs").get<std::vector<Vertex>>();
}

void to_json(nlohmann::json& j, const ColorMapping& mapping) {
  j = nlohmann::json::array();
  for (std::size_t i = 0; i < mapping.size(); ++i) {
    std::vector<Color> outs;
    for (ColorSet r = mapping[i]; r != 0; r &= r - 1) outs.push_back(std::countr_zero(r));
    j.push_back({{"inputs", mapping.tuple_of(i)}, {"outputs", outs}});
  }
}

void to_json(nlohmann::json& j, const BooleanFunction& f) {
  j = {{"name", to_string(f.name)}, {"dependency_mask", f.dependency_mask}, {"degenerate", f.degenerate}};
}

void to_json(nlohmann::json& j, const VerificationReport& report) {
  nlohmann::json structural = {{"pass", report.structural.pass}, {"gating", report.structural_gated}};
  structural["violations"] = nlohmann::json::array();
  for (Rule r : report.structural.violations) structural["violations"].push_back(to_string(r));
  j["structural"] = structural;

  if (report.universality) {
    j["universality"] = {{"pass", report.universality->pass},
                         {"failing_tuple", report.universality->failing_tuple
                                               ? nlohmann::json(*report.universality->failing_tuple)
                                               : nlohmann::json(nullptr)}};
  } else {
    j["universality"] = nullptr;
  }

  if (report.consistency) {
    nlohmann::json c = {{"pass", report.consistency->pass}};
    c["truth_table"] = report.consistency->table ? nlohmann::json(report.consistency->table->to_string())
                                                 : nlohmann::json(nullptr);
    if (const auto& w = report.consistency->witness) {
      c["witness"] = {{"false_inputs", w->tuple_false},
                      {"false_coloring", w->coloring_false},
                      {"true_inputs", w->tuple_true},
                      {"true_coloring", w->coloring_true}};
    } else {
      c["witness"] = nullptr;
    }
    j["consistency"] = c;
  } else {
    j["consistency"] = nullptr;
  }

  j["classification"] = report.classification ? nlohmann::json(*report.classification) : nlohmann::json(nullptr);
  j["target"] = report.target ? nlohmann::json(to_string(*report.target)) : nlohmann::json(nullptr);
  j["pass"] = report.passed();
}

void to_json(nlohmann::json& j, const Hit& hit) {
  j = {{"graph6", hit.graph6},
       {"roles", hit.roles},
       {"truth_table", hit.table.to_string()},
       {"function", to_string(hit.function)}};
}

void from_json(const nlohmann::json& j, Hit& hit) {
  hit.graph6 = j.at("graph6").get<std::string>();
  hit.roles = j.at("roles").get<RoleLabeling>();
  hit.table = TruthTable::from_string(j.at("truth_table").get<std::string>());
  const auto f = parse_function_name(j.at("function").get<std::string>());
  if (!f) throw Error(ErrorCode::InvalidArgument, "unknown function name in hit");
  hit.function = *f;
}

void to_json(nlohmann::json& j, const OrderCounters& c) {
  j = {{"graphs_seen", c.graphs_seen},
       {"configs_enumerated", c.configs_enumerated},
       {"configs_after_filter", c.configs_after_filter},
       {"hits_raw", function_counts(c.hits_raw)},
       {"hits_deduped", function_counts(c.hits_deduped)}};
}

void from_json(const nlohmann::json& j, OrderCounters& c) {
  c.graphs_seen = j.at("graphs_seen").get<std::uint64_t>();
  c.configs_enumerated = j.at("configs_enumerated").get<std::uint64_t>();
  c.configs_after_filter = j.at("configs_after_filter").get<std::uint64_t>();
  c.hits_raw = parse_function_counts(j.at("hits_raw"));
  c.hits_deduped = parse_function_counts(j.value("hits_deduped", nlohmann::json::object()));
}

void to_json(nlohmann::json& j, const SearchOptions& opts) {
  nlohmann::json targets = nlohmann::json::array();
  for (FunctionName f : opts.effective_targets()) targets.push_back(to_string(f));
  j = {{"targets", targets},
       {"arity", opts.arity},
       {"inputs_unordered", opts.inputs_unordered},
       {"minimal_mode", opts.minimal_mode},
       {"filter_enabled", opts.filter_enabled},
       {"sample_rate", optional_number(opts.sample_rate)},
       {"seed", opts.seed},
       {"strict", opts.strict}};
}

void to_json(nlohmann::json& j, const RarityRow& row) {
  j = {{"function", to_string(row.function)},
       {"vertices", row.order},
       {"count_deduped", row.count_deduped},
       {"count_raw", row.count_raw},
       {"graphs", row.graphs},
       {"configs", row.configs},
       {"filtered_configs", row.filtered_configs},
       {"graphs_per_hit", optional_number(row.graphs_per_hit)},
       {"configs_per_hit_deduped", optional_number(row.configs_per_hit_deduped)},
       {"configs_per_hit_raw", optional_number(row.configs_per_hit_raw)},
       {"filtered_per_hit_deduped", optional_number(row.filtered_per_hit_deduped)},
       {"filtered_per_hit_raw", optional_number(row.filtered_per_hit_raw)}};
}

void to_json(nlohmann::json& j, const SearchReport& report) {
  j["options"] = report.options;
  nlohmann::json orders = nlohmann::json::object();
  for (const auto& [order, counters] : report.per_order) orders[std::to_string(order)] = counters;
  j["per_order"] = orders;
  j["totals"] = report.totals();
  j["hits"] = report.hits;
  j["hits_deduped"] = report.hits_deduped;
  j["rarity"] = rarity_stats(report);
  nlohmann::json skipped = nlohmann::json::array();
  for (const auto& e : report.skipped) skipped.push_back({{"line", e.line}, {"message", e.message}});
  j["skipped"] = skipped;
  j["elapsed_seconds"] = report.elapsed_seconds;
}

}  // namespace ladget
