#include "ladget/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "ladget/canonical.hpp"
#include "ladget/filters.hpp"
#include "ladget/graph6.hpp"
#include "ladget/json.hpp"

namespace ladget {
namespace {

constexpr std::size_t kChunkGraphs = 512;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Deterministic per-graph sampling stream, independent of scheduling.
class Sampler {
 public:
  Sampler(std::optional<double> rate, std::uint64_t seed, std::uint64_t graph_index)
      : rate_(rate), state_(splitmix64(seed ^ splitmix64(graph_index))) {}

  bool keep() {
    if (!rate_) return true;
    state_ = splitmix64(state_);
    return static_cast<double>(state_ >> 11) * 0x1.0p-53 < *rate_;
  }

 private:
  std::optional<double> rate_;
  std::uint64_t state_;
};

template <typename Visit>
void visit_roles(int n, int arity, bool unordered, Visit&& visit) {
  RoleLabeling roles;
  roles.inputs.assign(static_cast<std::size_t>(arity), 0);
  const VertexSet all = n == kMaxVertices ? ~VertexSet{0} : bit(n) - 1;

  // Fills input slot j from the vertices still free.
  auto place = [&](auto&& self, int j, VertexSet used) -> void {
    if (j == arity) {
      visit(static_cast<const RoleLabeling&>(roles));
      return;
    }
    const int start = unordered && j > 0 ? roles.inputs[static_cast<std::size_t>(j - 1)] + 1 : 0;
    for (Vertex v = start; v < n; ++v) {
      if (used & bit(v)) continue;
      roles.inputs[static_cast<std::size_t>(j)] = v;
      self(self, j + 1, used | bit(v));
    }
  };

  for (Vertex a = 0; a < n; ++a) {
    roles.anchor = a;
    for (Vertex t = 0; t < n; ++t) {
      if (t == a) continue;
      roles.output = t;
      place(place, 0, (bit(a) | bit(t)) & all);
    }
  }
}

struct GraphOutcome {
  int order = 0;
  OrderCounters counters;
  std::vector<Hit> hits;
};

struct TargetTable {
  FunctionName name;
  TruthTable table;
};

GraphOutcome process_graph(const Graph& g, const std::string& g6, const SearchOptions& opts,
                           const std::vector<TargetTable>& targets, std::uint64_t graph_index) {
  GraphOutcome out;
  out.order = g.order();
  out.counters.graphs_seen = 1;
  if (g.order() < opts.arity + 2) return out;

  Sampler sampler(opts.sample_rate, opts.seed, graph_index);
  GadgetConfig cfg{g, {}, 3};
  visit_roles(g.order(), opts.arity, opts.inputs_unordered, [&](const RoleLabeling& roles) {
    if (!sampler.keep()) return;
    ++out.counters.configs_enumerated;
    if (opts.filter_enabled && !passes_structural(g, roles, opts.minimal_mode)) return;
    ++out.counters.configs_after_filter;

    cfg.roles = roles;
    const MappingVerdict verdict = judge_mapping(compute_mapping_by_enumeration(cfg));
    if (!verdict.consistent) return;
    for (const auto& target : targets) {
      if (*verdict.table == target.table) {
        ++out.counters.hits_raw[target.name];
        out.hits.push_back({g6, roles, *verdict.table, target.name});
        break;
      }
    }
  });
  return out;
}

/// Processes graphs [0, count) on `jobs` threads; outcome i belongs to graph i.
template <typename Work>
std::vector<GraphOutcome> run_parallel(std::size_t count, int jobs, Work&& work) {
  std::vector<GraphOutcome> outcomes(count);
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) outcomes[i] = work(i);
    return outcomes;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(std::min(workers, count));
  for (std::size_t w = 0; w < std::min(workers, count); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) outcomes[i] = work(i);
    });
  }
  for (auto& t : pool) t.join();
  return outcomes;
}

class Accumulator {
 public:
  explicit Accumulator(const SearchOptions& opts) {
    report_.options = opts;
    for (FunctionName f : opts.effective_targets()) targets_.push_back({f, truth_table_of(f, opts.arity)});
  }

  SearchReport& report() { return report_; }

  void absorb(std::span<const Graph> graphs, std::span<const std::string> codes) {
    const auto outcomes = run_parallel(graphs.size(), report_.options.jobs, [&](std::size_t i) {
      return process_graph(graphs[i], codes[i], report_.options, targets_, graphs_done_ + i);
    });
    for (const auto& o : outcomes) {
      report_.per_order[o.order].merge(o.counters);
      report_.hits.insert(report_.hits.end(), o.hits.begin(), o.hits.end());
    }
    graphs_done_ += graphs.size();
  }

  void restore(std::uint64_t graphs_done) { graphs_done_ = graphs_done; }
  std::uint64_t graphs_done() const { return graphs_done_; }

  SearchReport finish(std::chrono::steady_clock::time_point started) {
    std::sort(report_.hits.begin(), report_.hits.end(), hit_less);
    report_.hits_deduped = dedupe_hits(report_.hits, !report_.options.inputs_unordered);
    for (auto& [order, counters] : report_.per_order) counters.hits_deduped.clear();
    for (const Hit& h : report_.hits_deduped) ++report_.per_order[h.order()].hits_deduped[h.function];
    report_.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return std::move(report_);
  }

 private:
  SearchReport report_;
  std::vector<TargetTable> targets_;
  std::uint64_t graphs_done_ = 0;
};

void write_checkpoint(const std::string& path, std::uint64_t offset, std::uint64_t line, std::uint64_t graphs_done,
                      const SearchReport& report) {
  nlohmann::json j;
  j["byte_offset"] = offset;
  j["line"] = line;
  j["graphs_done"] = graphs_done;
  j["options"] = report.options;
  nlohmann::json orders = nlohmann::json::object();
  for (const auto& [order, counters] : report.per_order) orders[std::to_string(order)] = counters;
  j["per_order"] = orders;
  j["hits"] = report.hits;
  nlohmann::json skipped = nlohmann::json::array();
  for (const auto& e : report.skipped) skipped.push_back({{"line", e.line}, {"message", e.message}});
  j["skipped"] = skipped;

  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write checkpoint " + tmp);
    out << j.dump() << '\n';
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw Error(ErrorCode::InvalidArgument, "cannot move checkpoint into place at " + path);
  }
}

}  // namespace

void SearchOptions::validate() const {
  if (arity < 1 || arity > 2) throw Error(ErrorCode::InvalidArgument, "search arity must be 1 or 2");
  for (FunctionName f : targets) truth_table_of(f, arity);
  if (sample_rate && !(*sample_rate > 0.0 && *sample_rate <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "sample rate must lie in (0, 1]");
  }
  if (jobs < 1) throw Error(ErrorCode::InvalidArgument, "jobs must be at least 1");
}

std::vector<FunctionName> SearchOptions::effective_targets() const {
  if (!targets.empty()) return targets;
  if (arity == 1) return {FunctionName::Not, FunctionName::Identity};
  return {FunctionName::And, FunctionName::Or, FunctionName::Nand, FunctionName::Nor, FunctionName::Xor,
          FunctionName::Xnor};
}

int Hit::order() const { return decode_graph6(graph6).order(); }

bool hit_less(const Hit& a, const Hit& b) {
  if (a.graph6 != b.graph6) return a.graph6 < b.graph6;
  return a.roles < b.roles;
}

void OrderCounters::merge(const OrderCounters& other) {
  graphs_seen += other.graphs_seen;
  configs_enumerated += other.configs_enumerated;
  configs_after_filter += other.configs_after_filter;
  for (const auto& [f, n] : other.hits_raw) hits_raw[f] += n;
  for (const auto& [f, n] : other.hits_deduped) hits_deduped[f] += n;
}

OrderCounters SearchReport::totals() const {
  OrderCounters sum;
  for (const auto& [order, counters] : per_order) sum.merge(counters);
  return sum;
}

std::uint64_t SearchReport::deduped_count(FunctionName f) const {
  return static_cast<std::uint64_t>(
      std::count_if(hits_deduped.begin(), hits_deduped.end(), [f](const Hit& h) { return h.function == f; }));
}

bool SearchReport::same_results(const SearchReport& other) const {
  return per_order == other.per_order && hits == other.hits && hits_deduped == other.hits_deduped &&
         skipped == other.skipped;
}

std::uint64_t config_count(int order, int arity, bool inputs_unordered) {
  if (order < arity + 2) return 0;
  std::uint64_t count = static_cast<std::uint64_t>(order) * static_cast<std::uint64_t>(order - 1);
  std::uint64_t arrangements = 1;
  for (int j = 0; j < arity; ++j) {
    count *= static_cast<std::uint64_t>(order - 2 - j);
    arrangements *= static_cast<std::uint64_t>(j + 1);
  }
  return inputs_unordered ? count / arrangements : count;
}

void for_each_roles(int order, int arity, bool inputs_unordered, const std::function<void(const RoleLabeling&)>& visit) {
  visit_roles(order, arity, inputs_unordered, visit);
}

std::vector<GadgetConfig> enumerate_configs(const Graph& g, const SearchOptions& opts) {
  if (g.order() < opts.arity + 2) {
    throw Error(ErrorCode::GraphTooSmall, "order " + std::to_string(g.order()) + " cannot host " +
                                              std::to_string(opts.arity) + " inputs plus anchor and output");
  }
  std::vector<GadgetConfig> out;
  out.reserve(config_count(g.order(), opts.arity, opts.inputs_unordered));
  visit_roles(g.order(), opts.arity, opts.inputs_unordered,
              [&](const RoleLabeling& roles) { out.push_back({g, roles, 3}); });
  return out;
}

std::vector<Hit> dedupe_hits(std::span<const Hit> hits, bool inputs_ordered) {
  std::map<std::pair<FunctionName, Certificate>, Hit> classes;
  for (const Hit& h : hits) {
    if (!hits.empty() && h.roles.arity() != hits.front().roles.arity()) {
      throw Error(ErrorCode::ArityMismatch, "hits to deduplicate must share an arity");
    }
    const Graph g = decode_graph6(h.graph6);
    auto key = std::make_pair(h.function, canonical_labeling(g, role_colors(g, h.roles, inputs_ordered)).certificate);
    auto [it, inserted] = classes.try_emplace(std::move(key), h);
    if (!inserted && hit_less(h, it->second)) it->second = h;
  }
  std::vector<Hit> out;
  out.reserve(classes.size());
  for (auto& [key, h] : classes) out.push_back(std::move(h));
  std::sort(out.begin(), out.end(), hit_less);
  return out;
}

SearchReport search_graphs(std::span<const Graph> graphs, const SearchOptions& opts) {
  opts.validate();
  const auto started = std::chrono::steady_clock::now();
  Accumulator acc(opts);
  std::vector<std::string> codes;
  codes.reserve(graphs.size());
  for (const Graph& g : graphs) codes.push_back(encode_graph6(g));
  for (std::size_t begin = 0; begin < graphs.size(); begin += kChunkGraphs) {
    const std::size_t len = std::min(kChunkGraphs, graphs.size() - begin);
    acc.absorb(graphs.subspan(begin, len), std::span<const std::string>(codes).subspan(begin, len));
  }
  return acc.finish(started);
}

SearchReport search_stream(std::istream& in, const SearchOptions& opts, const CheckpointOptions& checkpoint) {
  opts.validate();
  const auto started = std::chrono::steady_clock::now();
  Accumulator acc(opts);
  SearchReport& report = acc.report();

  std::uint64_t offset = 0;
  std::uint64_t line_no = 0;
  if (checkpoint.resume && !checkpoint.path.empty()) {
    std::ifstream saved(checkpoint.path);
    if (saved) {
      const auto j = nlohmann::json::parse(saved);
      auto before = j.at("options");
      nlohmann::json now = opts;
      before.erase("jobs");
      now.erase("jobs");
      if (before != now) {
        throw Error(ErrorCode::InvalidArgument, "checkpoint " + checkpoint.path + " was written with other search options");
      }
      offset = j.at("byte_offset").get<std::uint64_t>();
      line_no = j.at("line").get<std::uint64_t>();
      acc.restore(j.at("graphs_done").get<std::uint64_t>());
      for (const auto& [order, counters] : j.at("per_order").items()) {
        report.per_order[std::stoi(order)] = counters.get<OrderCounters>();
      }
      report.hits = j.at("hits").get<std::vector<Hit>>();
      for (const auto& e : j.at("skipped")) {
        report.skipped.push_back({e.at("line").get<std::uint64_t>(), e.at("message").get<std::string>()});
      }
      in.seekg(static_cast<std::streamoff>(offset));
      if (!in) throw Error(ErrorCode::InvalidArgument, "cannot seek input to checkpoint offset; resume needs a file");
    }
  }

  std::vector<Graph> graphs;
  std::vector<std::string> codes;
  std::uint64_t since_checkpoint = 0;
  auto flush = [&] {
    acc.absorb(graphs, codes);
    since_checkpoint += graphs.size();
    graphs.clear();
    codes.clear();
    if (!checkpoint.path.empty() && since_checkpoint >= checkpoint.every_graphs) {
      write_checkpoint(checkpoint.path, offset, line_no, acc.graphs_done(), report);
      since_checkpoint = 0;
    }
  };

  std::string line;
  while (std::getline(in, line)) {
    offset += line.size() + (in.eof() ? 0 : 1);
    ++line_no;
    if (line.find_first_not_of(" \r\t") == std::string::npos) continue;
    try {
      graphs.push_back(decode_graph6(line));
    } catch (const Error& e) {
      if (opts.strict) throw Error(ErrorCode::InvalidGraph6, "line " + std::to_string(line_no) + ": " + e.what());
      report.skipped.push_back({line_no, e.what()});
      continue;
    }
    codes.push_back(encode_graph6(graphs.back()));
    if (graphs.size() == kChunkGraphs) flush();
  }
  if (!graphs.empty()) flush();
  if (!checkpoint.path.empty()) write_checkpoint(checkpoint.path, offset, line_no, acc.graphs_done(), report);
  return acc.finish(started);
}

std::vector<RarityRow> rarity_stats(const SearchReport& report) {
  std::vector<RarityRow> rows;
  for (const auto& [order, counters] : report.per_order) {
    for (FunctionName f : report.options.effective_targets()) {
      RarityRow row;
      row.function = f;
      row.order = order;
      const auto raw = counters.hits_raw.find(f);
      const auto dedup = counters.hits_deduped.find(f);
      row.count_raw = raw == counters.hits_raw.end() ? 0 : raw->second;
      row.count_deduped = dedup == counters.hits_deduped.end() ? 0 : dedup->second;
      row.graphs = counters.graphs_seen;
      row.configs = counters.configs_enumerated;
      row.filtered_configs = counters.configs_after_filter;
      auto per = [](std::uint64_t universe, std::uint64_t hits) -> std::optional<double> {
        if (hits == 0) return std::nullopt;
        return static_cast<double>(universe) / static_cast<double>(hits);
      };
      row.graphs_per_hit = per(row.graphs, row.count_deduped);
      row.configs_per_hit_deduped = per(row.configs, row.count_deduped);
      row.configs_per_hit_raw = per(row.configs, row.count_raw);
      row.filtered_per_hit_deduped = per(row.filtered_configs, row.count_deduped);
      row.filtered_per_hit_raw = per(row.filtered_configs, row.count_raw);
      rows.push_back(row);
    }
  }
  return rows;
}

void print_report(std::ostream& out, const SearchReport& report) {
  auto ratio = [](const std::optional<double>& v) {
    if (!v) return std::string("no hits");
    std::ostringstream os;
    os << "1 in " << std::setprecision(4) << *v;
    return os.str();
  };
  for (const auto& [order, c] : report.per_order) {
    out << "order " << order << ": graphs " << c.graphs_seen << ", configs " << c.configs_enumerated
        << ", after filter " << c.configs_after_filter;
    if (c.configs_enumerated > 0) {
      out << " (" << std::setprecision(3)
          << 100.0 * static_cast<double>(c.configs_after_filter) / static_cast<double>(c.configs_enumerated)
          << "% kept)";
    }
    out << '\n';
  }
  out << "hits: " << report.hits.size() << " raw, " << report.hits_deduped.size() << " non-isomorphic\n";
  for (const Hit& h : report.hits_deduped) {
    out << "  " << to_string(h.function) << "  " << h.graph6 << "  " << to_string(h.roles) << "  tt="
        << h.table.to_string() << '\n';
  }
  out << "function  vertices  count(dedup/raw)  graphs/hit  configs/hit(dedup)  configs/hit(raw)  "
         "filtered/hit(dedup)  filtered/hit(raw)\n";
  for (const RarityRow& row : rarity_stats(report)) {
    out << std::left << std::setw(10) << to_string(row.function) << std::setw(10) << row.order << std::setw(18)
        << (std::to_string(row.count_deduped) + "/" + std::to_string(row.count_raw)) << std::setw(12)
        << ratio(row.graphs_per_hit) << std::setw(20) << ratio(row.configs_per_hit_deduped) << std::setw(18)
        << ratio(row.configs_per_hit_raw) << std::setw(21) << ratio(row.filtered_per_hit_deduped)
        << ratio(row.filtered_per_hit_raw) << std::right << '\n';
  }
  for (const auto& e : report.skipped) out << "skipped line " << e.line << ": " << e.message << '\n';
}

}  // namespace ladget
