#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ladget/graph.hpp"

namespace ladget {

/// Isomorphism-invariant certificate of a vertex-colored graph: the
/// adjacency rows and vertex colors after canonical relabeling. Two colored
/// graphs are color-preservingly isomorphic iff their certificates compare
/// equal.
struct Certificate {
  std::vector<int> colors;
  std::vector<VertexSet> rows;

  friend bool operator==(const Certificate&, const Certificate&) = default;
  friend auto operator<=>(const Certificate&, const Certificate&) = default;
};

struct CanonicalLabeling {
  /// perm[v] is the canonical position of vertex v.
  std::vector<Vertex> perm;
  Certificate certificate;
};

/// Canonical labeling by color refinement plus individualization, with twin
/// pruning. `colors` may be empty (all vertices share one color).
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors = {});

/// Vertex colors that pin down a role labeling: anchor, output and inputs
/// get distinct colors (one color per input position when ordered).
std::vector<int> role_colors(const Graph& g, const RoleLabeling& roles, bool inputs_ordered);

/// True iff an isomorphism g1 -> g2 maps anchor to anchor, output to output
/// and inputs to inputs (as a tuple when inputs_ordered, else as a set).
/// Throws ArityMismatch when the input counts differ.
bool roles_isomorphic(const Graph& g1, const RoleLabeling& r1, const Graph& g2,
                      const RoleLabeling& r2, bool inputs_ordered);

/// One representative per isomorphism class of connected graphs on n
/// vertices, 1 <= n <= 7, in a fixed order. Throws SizeUnsupported above 7.
std::vector<Graph> generate_connected(int n);

/// Given every connected graph of order m (one per class), returns every
/// connected graph of order m + 1 (one per class, canonical labeling,
/// sorted by certificate). Used to produce graph6 streams beyond the
/// built-in generator's cap.
std::vector<Graph> extend_connected(std::span<const Graph> order_m);

}  // namespace ladget
