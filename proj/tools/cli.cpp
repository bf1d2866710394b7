#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ladget/appendix.hpp"
#include "ladget/canonical.hpp"
#include "ladget/embed.hpp"
#include "ladget/fixtures.hpp"
#include "ladget/graph6.hpp"
#include "ladget/json.hpp"
#include "ladget/search.hpp"
#include "ladget/verify.hpp"

namespace ladget::cli {
namespace {

/// A semantic check failed (exit 1), as opposed to bad usage (exit 2).
struct CheckFailed {};

/// Graph + roles as given on the command line, either a fixture name or a
/// graph6 string with --anchor/--out/--in.
struct GadgetArgs {
  std::string graph6;
  std::string fixture;
  std::optional<int> anchor;
  std::optional<int> output;
  std::vector<int> inputs;
  bool one_based = false;

  void attach(CLI::App& cmd) {
    cmd.add_option("graph6", graph6, "graph6 string of the host graph");
    cmd.add_option("--fixture", fixture, "built-in gadget name (MOV, NOT, KNOT, ROT, ROTS, NAND7, ...)");
    cmd.add_option("--anchor", anchor, "anchor vertex a0");
    cmd.add_option("--out", output, "output vertex theta");
    cmd.add_option("--in", inputs, "input vertices, comma separated")->delimiter(',');
    cmd.add_flag("--one-based", one_based, "role indices on the command line start at 1");
  }

  GadgetConfig resolve() const {
    const int shift = one_based ? 1 : 0;
    GadgetConfig cfg;
    if (!fixture.empty()) {
      cfg = builtin(fixture);
      if (!graph6.empty()) throw CLI::ValidationError("give either a graph6 string or --fixture, not both");
    } else {
      if (graph6.empty()) throw CLI::ValidationError("a graph6 string or --fixture is required");
      if (!anchor || !output || inputs.empty()) {
        throw CLI::ValidationError("--anchor, --out and --in are required with a graph6 string");
      }
      cfg.graph = decode_graph6(graph6);
    }
    if (anchor) cfg.roles.anchor = *anchor - shift;
    if (output) cfg.roles.output = *output - shift;
    if (!inputs.empty()) {
      cfg.roles.inputs.clear();
      for (int v : inputs) cfg.roles.inputs.push_back(v - shift);
    }
    return cfg;
  }
};

FunctionName parse_target(const std::string& text) {
  const auto f = parse_function_name(text);
  if (!f) throw CLI::ValidationError("unknown function name \"" + text + "\"");
  return *f;
}

std::string format_tuple(const std::vector<Color>& t) {
  if (t.size() == 1) return std::to_string(t[0]);
  std::string s = "(";
  for (std::size_t j = 0; j < t.size(); ++j) s += (j ? "," : "") + std::to_string(t[j]);
  return s + ")";
}

std::string format_mapping(const ColorMapping& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ", ";
    s += format_tuple(m.tuple_of(i)) + "→" + (m[i] == 0 ? std::string("{}") : format_color_set(m[i]));
  }
  return s;
}

void print_verification(std::ostream& out, const GadgetConfig& cfg, const VerificationReport& r) {
  out << "graph " << encode_graph6(cfg.graph) << "  " << to_string(cfg.roles) << "  k=" << cfg.k << '\n';
  out << "structural: " << (r.structural.pass ? "pass" : "fail");
  for (Rule rule : r.structural.violations) out << ' ' << to_string(rule);
  out << (r.structural_gated ? " (gating)" : " (informative)") << '\n';
  if (r.universality) {
    out << "universality: " << (r.universality->pass ? "pass" : "fail");
    if (r.universality->failing_tuple) out << " at inputs " << format_tuple(*r.universality->failing_tuple);
    out << '\n';
  }
  if (r.consistency) {
    out << "consistency: " << (r.consistency->pass ? "pass" : "fail");
    if (const auto& w = r.consistency->witness) {
      out << " (inputs " << format_tuple(w->tuple_false) << " allow theta=0, inputs " << format_tuple(w->tuple_true)
          << " allow theta=" << w->coloring_true[static_cast<std::size_t>(cfg.roles.output)] << ")";
    }
    out << '\n';
  }
  if (r.classification) {
    out << "truth table: " << r.consistency->table->to_string() << "  function: " << to_string(r.classification->name)
        << (r.classification->degenerate ? " (degenerate)" : "") << '\n';
  }
  if (r.target) out << "target " << to_string(*r.target) << ": " << (r.passed() ? "match" : "no match") << '\n';
  out << "result: " << (r.passed() ? "PASS" : "FAIL") << '\n';
}

nlohmann::json config_json(const GadgetConfig& cfg) {
  return {{"graph6", encode_graph6(cfg.graph)}, {"roles", cfg.roles}, {"k", cfg.k}};
}

std::uint64_t seed_from_env() {
  if (const char* s = std::getenv("LADGET_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw CLI::ValidationError("LADGET_SEED must be an unsigned integer");
    }
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verify, search for and embed single-anchor 3-coloring ladgets", "ladget"};
  app.require_subcommand(1);
  bool json = false;
  int exit_code = kExitPass;

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the ladget checks on one configuration");
  GadgetArgs verify_args;
  verify_args.attach(*verify_cmd);
  std::string verify_target;
  int verify_k = 3;
  bool verify_minimal = false;
  verify_cmd->add_option("--target", verify_target, "expected function (NAND, OR, ...)");
  verify_cmd->add_option("--k", verify_k, "color count")->check(CLI::Range(3, 32));
  verify_cmd->add_flag("--minimal", verify_minimal, "gate on the structural filter incl. INTERNAL_DEGREE");
  verify_cmd->add_flag("--json", json, "machine-readable output");
  verify_cmd->callback([&] {
    GadgetConfig cfg = verify_args.resolve();
    cfg.k = verify_k;
    std::optional<FunctionName> target;
    if (!verify_target.empty()) target = parse_target(verify_target);
    const auto report = verify_ladget(cfg, target, {.minimal_mode = verify_minimal});
    if (json) {
      nlohmann::json j = report;
      j["config"] = config_json(cfg);
      out << j.dump(2) << '\n';
    } else {
      print_verification(out, cfg, report);
    }
    if (!report.passed()) exit_code = kExitFail;
  });

  // search
  auto* search_cmd = app.add_subcommand("search", "census over a graph6 stream or built-in generation");
  std::string stream_path;
  std::optional<int> gen;
  std::vector<std::string> targets;
  SearchOptions opts;
  bool ordered = false;
  bool no_filter = false;
  std::optional<double> sample;
  CheckpointOptions checkpoint;
  search_cmd->add_option("stream", stream_path, "graph6 file, or - for standard input");
  search_cmd->add_option("--gen", gen, "use built-in generation of connected graphs of this order (1..7)");
  search_cmd->add_option("--target", targets, "functions to look for (repeatable or comma separated)")->delimiter(',');
  search_cmd->add_option("--arity", opts.arity, "number of inputs")->check(CLI::IsMember({1, 2}));
  search_cmd->add_flag("--ordered-inputs", ordered, "treat input tuples as ordered");
  search_cmd->add_flag("--no-filter", no_filter, "skip the structural prefilter");
  search_cmd->add_flag("--minimal", opts.minimal_mode, "enable the minimal-order degree rule");
  search_cmd->add_option("--jobs", opts.jobs, "worker threads")->check(CLI::PositiveNumber);
  search_cmd->add_option("--sample", sample, "examine each config with this probability (seed: LADGET_SEED)");
  search_cmd->add_flag("--strict", opts.strict, "abort on the first malformed graph6 line");
  search_cmd->add_option("--checkpoint", checkpoint.path, "write resumable progress to this file");
  search_cmd->add_option("--checkpoint-every", checkpoint.every_graphs, "graphs between checkpoint writes");
  search_cmd->add_flag("--resume", checkpoint.resume, "continue from --checkpoint");
  search_cmd->add_flag("--json", json, "machine-readable output");
  search_cmd->callback([&] {
    for (const auto& t : targets) opts.targets.push_back(parse_target(t));
    opts.inputs_unordered = !ordered;
    opts.filter_enabled = !no_filter;
    opts.sample_rate = sample;
    opts.seed = seed_from_env();
    SearchReport report;
    if (gen) {
      if (!stream_path.empty()) throw CLI::ValidationError("give either a stream or --gen, not both");
      const auto graphs = generate_connected(*gen);
      report = search_graphs(graphs, opts);
    } else if (stream_path.empty() || stream_path == "-") {
      if (checkpoint.resume) throw CLI::ValidationError("--resume needs a seekable file, not standard input");
      report = search_stream(in, opts, checkpoint);
    } else {
      std::ifstream file(stream_path, std::ios::binary);
      if (!file) throw CLI::ValidationError("cannot open " + stream_path);
      report = search_stream(file, opts, checkpoint);
    }
    if (json) {
      out << nlohmann::json(report).dump(2) << '\n';
    } else {
      print_report(out, report);
    }
  });

  // map
  auto* map_cmd = app.add_subcommand("map", "print the input-to-output color mapping");
  GadgetArgs map_args;
  map_args.attach(*map_cmd);
  int map_k = 3;
  bool swap_io = false;
  map_cmd->add_option("--k", map_k, "color count")->check(CLI::Range(3, 32));
  map_cmd->add_flag("--swap", swap_io, "exchange the (single) input with the output first");
  map_cmd->add_flag("--json", json, "machine-readable output");
  map_cmd->callback([&] {
    GadgetConfig cfg = map_args.resolve();
    cfg.k = map_k;
    if (swap_io) {
      if (cfg.arity() != 1) throw CLI::ValidationError("--swap needs a single-input gadget");
      std::swap(cfg.roles.inputs[0], cfg.roles.output);
    }
    const auto mapping = compute_mapping(cfg);
    if (json) {
      out << nlohmann::json{{"config", config_json(cfg)}, {"mapping", mapping}}.dump(2) << '\n';
    } else {
      out << format_mapping(mapping) << '\n';
    }
  });

  // embed
  auto* embed_cmd = app.add_subcommand("embed", "lift a 3-coloring ladget into k-coloring");
  GadgetArgs embed_args;
  embed_args.attach(*embed_cmd);
  int embed_k = 3;
  embed_cmd->add_option("--k", embed_k, "target color count")->required()->check(CLI::Range(3, 32));
  embed_cmd->add_flag("--json", json, "machine-readable output");
  embed_cmd->callback([&] {
    const GadgetConfig cfg = embed_args.resolve();
    const auto embedded = embed_to_k(cfg, embed_k);
    const auto original = judge_mapping(compute_mapping(cfg));
    if (!original.consistent) {
      err << "source gadget is not a consistent 3-coloring ladget; nothing to preserve\n";
      exit_code = kExitFail;
      return;
    }
    const auto verdict = verify_embedding(embedded, *original.table);
    if (json) {
      out << nlohmann::json{{"config", config_json(embedded.config)},
                            {"package", embedded.package},
                            {"original_truth_table", original.table->to_string()},
                            {"embedded_truth_table",
                             verdict.table ? nlohmann::json(verdict.table->to_string()) : nlohmann::json(nullptr)},
                            {"universal", verdict.universal},
                            {"consistent", verdict.consistent},
                            {"pass", verdict.pass}}
                 .dump(2)
          << '\n';
    } else {
      out << encode_graph6(embedded.config.graph) << '\n';
      out << "vertices " << embedded.config.graph.order() << ", package " << embedded.package.size() << ", k "
          << embed_k << ", truth table " << original.table->to_string() << " -> "
          << (verdict.table ? verdict.table->to_string() : std::string("none")) << '\n';
      out << "result: " << (verdict.pass ? "PASS" : "FAIL") << '\n';
    }
    if (!verdict.pass) exit_code = kExitFail;
  });

  // appendix-check
  auto* appendix_cmd = app.add_subcommand("appendix-check", "replay the published minimal-ladget table");
  std::string only_function;
  std::string table_path;
  appendix_cmd->add_option("--function", only_function, "restrict to one function");
  appendix_cmd->add_option("--table", table_path, "alternative table file (same format as data/appendix.tsv)");
  appendix_cmd->add_flag("--json", json, "machine-readable output");
  appendix_cmd->callback([&] {
    std::vector<AppendixEntry> entries;
    if (table_path.empty()) {
      entries = builtin_appendix();
    } else {
      std::ifstream file(table_path);
      if (!file) throw CLI::ValidationError("cannot open " + table_path);
      std::stringstream text;
      text << file.rdbuf();
      entries = parse_appendix(text.str());
    }
    std::optional<FunctionName> only;
    if (!only_function.empty()) only = parse_target(only_function);
    const auto rows = check_appendix(entries, only);
    std::size_t passed = 0;
    nlohmann::json jrows = nlohmann::json::array();
    for (const auto& row : rows) {
      passed += row.pass ? 1 : 0;
      const auto& e = row.entry;
      if (json) {
        jrows.push_back({{"graph6", e.graph6},
                         {"anchor", e.anchor},
                         {"output", e.output},
                         {"inputs", {e.input1, e.input2}},
                         {"function", to_string(e.function)},
                         {"pass", row.pass}});
      } else {
        out << (row.pass ? "PASS " : "FAIL ") << to_string(e.function) << ' ' << e.graph6 << " a0=" << e.anchor
            << " theta=" << e.output << " i1=" << e.input1 << " i2=" << e.input2 << '\n';
      }
    }
    if (json) {
      out << nlohmann::json{{"rows", jrows}, {"passed", passed}, {"total", rows.size()}}.dump(2) << '\n';
    } else {
      out << passed << '/' << rows.size() << " rows pass\n";
    }
    if (passed != rows.size()) exit_code = kExitFail;
  });

  // diff
  auto* diff_cmd = app.add_subcommand("diff", "list edges present in only one of two graphs (same labeling)");
  std::string diff_a;
  std::string diff_b;
  diff_cmd->add_option("first", diff_a, "graph6")->required();
  diff_cmd->add_option("second", diff_b, "graph6")->required();
  diff_cmd->add_flag("--json", json, "machine-readable output");
  diff_cmd->callback([&] {
    const Graph a = decode_graph6(diff_a);
    const Graph b = decode_graph6(diff_b);
    if (a.order() != b.order()) throw CLI::ValidationError("graphs have different orders");
    std::vector<std::pair<Vertex, Vertex>> only_a;
    std::vector<std::pair<Vertex, Vertex>> only_b;
    for (auto e : a.edges()) {
      if (!b.has_edge(e.first, e.second)) only_a.push_back(e);
    }
    for (auto e : b.edges()) {
      if (!a.has_edge(e.first, e.second)) only_b.push_back(e);
    }
    if (json) {
      out << nlohmann::json{{"only_first", only_a}, {"only_second", only_b}}.dump(2) << '\n';
    } else {
      out << "only in " << diff_a << ':';
      for (auto [u, v] : only_a) out << ' ' << u << '-' << v;
      out << "\nonly in " << diff_b << ':';
      for (auto [u, v] : only_b) out << ' ' << u << '-' << v;
      out << '\n';
    }
  });

  // fixtures
  auto* fixtures_cmd = app.add_subcommand("fixtures", "list built-in gadgets");
  fixtures_cmd->callback([&] {
    for (auto name : builtin_names()) {
      const auto cfg = builtin(name);
      out << name << '\t' << encode_graph6(cfg.graph) << '\t' << to_string(cfg.roles) << '\n';
    }
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return exit_code;
}

}  // namespace ladget::cli
