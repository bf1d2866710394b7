#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <type_traits>
#include <functional>
#include <utility>
#include <vector>

#include "ladget/graph.hpp"

namespace ladget {

using Color = int;

/// Colors pinned to specific vertices before search.
struct PartialAssignment {
  std::vector<std::pair<Vertex, Color>> pairs;

  PartialAssignment() = default;
  PartialAssignment(std::initializer_list<std::pair<Vertex, Color>> init) : pairs(init) {}

  void fix(Vertex v, Color c) { pairs.emplace_back(v, c); }
};

/// Total vertex -> color map.
using Coloring = std::vector<Color>;

/// Receives each proper coloring; return false to stop the enumeration.
using ColoringVisitor = std::function<bool(const Coloring&)>;

/// Walks every proper k-coloring of g extending `fixed`, in a deterministic
/// order (most-constrained vertex first, ties by vertex id, colors
/// ascending). Inconsistent fixed pairs yield nothing. Returns false iff the
/// visitor stopped the walk early.
bool for_each_coloring(const Graph& g, const PartialAssignment& fixed, int k, const ColoringVisitor& visit);

std::vector<Coloring> enumerate_colorings(const Graph& g, const PartialAssignment& fixed, int k);

/// Stops at the first proper coloring found.
bool exists_coloring(const Graph& g, const PartialAssignment& fixed, int k);

/// Brute-force k^n scan, for tests. Throws TooLarge when k^n > 1e8.
std::vector<Coloring> oracle_colorings(const Graph& g, const PartialAssignment& fixed, int k);

bool is_proper(const Graph& g, const Coloring& c);

namespace detail {

using Domains = std::array<std::uint32_t, kMaxVertices>;

/// Initial color domains with `fixed` applied; false if two fixed pairs
/// already contradict each other. Throws InvalidArgument for out-of-range vertices/colors.
bool initial_domains(const Graph& g, const PartialAssignment& fixed, int k, Domains& out);

/// Backtracking core shared by the public entry points. The visitor gets
/// the coloring and returns false to stop.
template <typename Visitor>
class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, Visitor& visit) : g_(g), visit_(visit), coloring_(static_cast<std::size_t>(g.order()), 0) {}

  bool run(const Domains& domains) { return descend(domains, g_.all_vertices()); }

 private:
  bool descend(const Domains& dom, VertexSet open) {
    if (open == 0) return visit_(static_cast<const Coloring&>(coloring_));

    Vertex pick = -1;
    int best = 33;
    for (VertexSet r = open; r != 0; r &= r - 1) {
      const Vertex v = std::countr_zero(r);
      const int size = std::popcount(dom[static_cast<std::size_t>(v)]);
      if (size < best) {
        best = size;
        pick = v;
      }
    }

    const VertexSet rest = open & ~bit(pick);
    const VertexSet touched = g_.row(pick) & rest;
    for (std::uint32_t choices = dom[static_cast<std::size_t>(pick)]; choices != 0; choices &= choices - 1) {
      const int c = std::countr_zero(choices);
      const std::uint32_t mask = ~(std::uint32_t{1} << c);
      Domains next = dom;
      bool alive = true;
      for (VertexSet r = touched; r != 0; r &= r - 1) {
        auto& d = next[static_cast<std::size_t>(std::countr_zero(r))];
        d &= mask;
        if (d == 0) {
          alive = false;
          break;
        }
      }
      if (!alive) continue;
      coloring_[static_cast<std::size_t>(pick)] = c;
      if (!descend(next, rest)) return false;
    }
    return true;
  }

  const Graph& g_;
  Visitor& visit_;
  Coloring coloring_;
};

}  // namespace detail

/// Template form of for_each_coloring for hot loops.
template <typename Visitor>
bool visit_colorings(const Graph& g, const PartialAssignment& fixed, int k, Visitor&& visit) {
  detail::Domains domains{};
  if (!detail::initial_domains(g, fixed, k, domains)) return true;
  detail::ColoringSearch<std::remove_reference_t<Visitor>> search(g, visit);
  return search.run(domains);
}

}  // namespace ladget
