#pragma once

#include <string>
#include <string_view>

#include "ladget/graph.hpp"

namespace ladget {

/// Parses one graph6 record (no ">>graph6<<" header). Trailing CR/LF and
/// spaces are ignored. Throws InvalidGraph6 on malformed input or n > 32.
Graph decode_graph6(std::string_view line);

/// graph6 bytes for g under its current labeling.
std::string encode_graph6(const Graph& g);

}  // namespace ladget
