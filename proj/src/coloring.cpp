#include "ladget/coloring.hpp"

#include <cmath>

namespace ladget {
namespace detail {

bool initial_domains(const Graph& g, const PartialAssignment& fixed, int k, Domains& out) {
  if (k < 1 || k > 32) throw Error(ErrorCode::InvalidArgument, "color count must be in 1..32");
  const std::uint32_t full = k == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << k) - 1;
  out.fill(0);
  for (int v = 0; v < g.order(); ++v) out[static_cast<std::size_t>(v)] = full;
  bool consistent = true;
  for (auto [v, c] : fixed.pairs) {
    if (v < 0 || v >= g.order()) {
      throw Error(ErrorCode::InvalidArgument, "fixed vertex " + std::to_string(v) + " out of range");
    }
    if (c < 0 || c >= k) {
      throw Error(ErrorCode::InvalidArgument, "fixed color " + std::to_string(c) + " not below k=" + std::to_string(k));
    }
    auto& d = out[static_cast<std::size_t>(v)];
    d &= std::uint32_t{1} << c;
    if (d == 0) consistent = false;
  }
  return consistent;
}

}  // namespace detail

bool for_each_coloring(const Graph& g, const PartialAssignment& fixed, int k, const ColoringVisitor& visit) {
  return visit_colorings(g, fixed, k, [&](const Coloring& c) { return visit(c); });
}

std::vector<Coloring> enumerate_colorings(const Graph& g, const PartialAssignment& fixed, int k) {
  std::vector<Coloring> out;
  visit_colorings(g, fixed, k, [&](const Coloring& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

bool exists_coloring(const Graph& g, const PartialAssignment& fixed, int k) {
  bool found = false;
  visit_colorings(g, fixed, k, [&](const Coloring&) {
    found = true;
    return false;
  });
  return found;
}

bool is_proper(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.size()) != g.order()) return false;
  for (auto [u, v] : g.edges()) {
    if (c[static_cast<std::size_t>(u)] == c[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

std::vector<Coloring> oracle_colorings(const Graph& g, const PartialAssignment& fixed, int k) {
  const int n = g.order();
  if (std::pow(static_cast<double>(k), n) > 1e8) {
    throw Error(ErrorCode::TooLarge, std::to_string(k) + "^" + std::to_string(n) + " exceeds the 1e8 scan guard");
  }
  for (auto [v, c] : fixed.pairs) {
    if (v < 0 || v >= n || c < 0 || c >= k) throw Error(ErrorCode::InvalidArgument, "fixed pair out of range");
  }
  std::vector<Coloring> out;
  Coloring c(static_cast<std::size_t>(n), 0);
  while (true) {
    bool keep = is_proper(g, c);
    for (auto [v, col] : fixed.pairs) keep = keep && c[static_cast<std::size_t>(v)] == col;
    if (keep) out.push_back(c);
    int pos = n - 1;
    while (pos >= 0 && ++c[static_cast<std::size_t>(pos)] == k) c[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
  }
  return out;
}

}  // namespace ladget
