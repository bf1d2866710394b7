#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ladget/gadget.hpp"
#include "ladget/verify.hpp"

namespace ladget {

/// One published minimal-ladget configuration.
struct AppendixEntry {
  std::string graph6;
  Vertex anchor = 0;
  Vertex output = 0;
  Vertex input1 = 0;
  Vertex input2 = 0;
  FunctionName function = FunctionName::Other;

  GadgetConfig config() const;
};

/// Parses the tab-separated table. A "# index-base: N" comment shifts every
/// index by -N; other '#' lines are ignored.
std::vector<AppendixEntry> parse_appendix(std::string_view text);

/// The table shipped in data/appendix.tsv, compiled into the library.
std::string_view builtin_appendix_text();
std::vector<AppendixEntry> builtin_appendix();

struct AppendixRowResult {
  AppendixEntry entry;
  VerificationReport report;
  bool pass = false;
};

/// Verifies each row (minimal-mode structural gate on) against its claimed
/// function; `only` restricts to one function.
std::vector<AppendixRowResult> check_appendix(std::span<const AppendixEntry> entries,
                                              std::optional<FunctionName> only = std::nullopt);

}  // namespace ladget
