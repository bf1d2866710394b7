#include "ladget/appendix.hpp"

#include <sstream>

#include "ladget/graph6.hpp"

namespace ladget {
namespace detail {
extern const std::string_view kAppendixText;
}

GadgetConfig AppendixEntry::config() const {
  GadgetConfig cfg{decode_graph6(graph6), {anchor, {input1, input2}, output}, 3};
  cfg.validate();
  return cfg;
}

std::vector<AppendixEntry> parse_appendix(std::string_view text) {
  std::vector<AppendixEntry> out;
  int base = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line[0] == '#') {
      const auto pos = line.find("index-base:");
      if (pos != std::string::npos) base = std::stoi(line.substr(pos + 11));
      continue;
    }
    std::istringstream fields(line);
    AppendixEntry e;
    std::string function;
    if (!(fields >> e.graph6 >> e.anchor >> e.output >> e.input1 >> e.input2 >> function)) {
      throw Error(ErrorCode::InvalidArgument, "appendix line " + std::to_string(line_no) + " is malformed");
    }
    const auto f = parse_function_name(function);
    if (!f) throw Error(ErrorCode::InvalidArgument, "appendix line " + std::to_string(line_no) + ": unknown function");
    e.function = *f;
    e.anchor -= base;
    e.output -= base;
    e.input1 -= base;
    e.input2 -= base;
    out.push_back(std::move(e));
  }
  return out;
}

std::string_view builtin_appendix_text() { return detail::kAppendixText; }

std::vector<AppendixEntry> builtin_appendix() { return parse_appendix(builtin_appendix_text()); }

std::vector<AppendixRowResult> check_appendix(std::span<const AppendixEntry> entries, std::optional<FunctionName> only) {
  std::vector<AppendixRowResult> out;
  for (const auto& e : entries) {
    if (only && e.function != *only) continue;
    AppendixRowResult row{e, {}, false};
    try {
      row.report = verify_ladget(e.config(), e.function, {.minimal_mode = true});
      row.pass = row.report.passed();
    } catch (const Error&) {
      row.pass = false;
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace ladget
