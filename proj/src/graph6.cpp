#include "ladget/graph6.hpp"

#include <cstdint>

namespace ladget {
namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;

[[noreturn]] void fail(const std::string& why) { throw Error(ErrorCode::InvalidGraph6, why); }

std::string_view trim_line(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ')) {
    line.remove_suffix(1);
  }
  return line;
}

int sextet(char c, std::size_t pos) {
  const int b = static_cast<unsigned char>(c);
  if (b < kBias || b > kMaxByte) {
    fail("byte " + std::to_string(b) + " at position " + std::to_string(pos) + " outside 63..126");
  }
  return b - kBias;
}

}  // namespace

Graph decode_graph6(std::string_view line) {
  line = trim_line(line);
  if (line.starts_with(">>graph6<<")) {
    fail("\">>graph6<<\" header not supported; strip it (e.g. run the generator without -h)");
  }
  if (line.starts_with(':') || line.starts_with('&')) {
    fail("sparse6/digraph6 records are not supported, only graph6");
  }
  if (line.empty()) fail("empty record");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (sextet(line[0], 0) != kMaxByte - kBias) {
    n = static_cast<std::uint64_t>(sextet(line[0], 0));
    pos = 1;
  } else {
    const bool eight_byte = line.size() > 1 && line[1] == static_cast<char>(kMaxByte);
    const std::size_t start = eight_byte ? 2 : 1;
    const std::size_t digits = eight_byte ? 6 : 3;
    if (line.size() < start + digits) fail("truncated vertex count");
    for (std::size_t i = 0; i < digits; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(line[start + i], start + i));
    pos = start + digits;
  }
  if (n > static_cast<std::uint64_t>(kMaxVertices)) {
    fail("order " + std::to_string(n) + " exceeds the supported maximum of " + std::to_string(kMaxVertices));
  }

  const int order = static_cast<int>(n);
  const std::size_t bits = static_cast<std::size_t>(order) * static_cast<std::size_t>(order - (order > 0)) / 2;
  const std::size_t expected = pos + (bits + 5) / 6;
  if (line.size() != expected) {
    fail("length " + std::to_string(line.size()) + " does not match " + std::to_string(expected) +
         " expected for order " + std::to_string(order));
  }

  Graph g(order);
  std::size_t k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = sextet(line[pos + k / 6], pos + k / 6);
      if ((chunk >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(i, j);
    }
  }
  for (std::size_t p = pos; p < line.size(); ++p) sextet(line[p], p);
  return g;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(n + kBias));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace ladget
