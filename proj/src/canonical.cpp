#include "ladget/canonical.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace ladget {
namespace {

using Cells = std::vector<int>;  // cell index per vertex; cells are ordered

/// Replaces cell ids by the rank of each vertex's key among distinct keys.
template <typename Key>
int rank_by(const std::vector<Key>& keys, Cells& cells) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t v = 0; v < keys.size(); ++v) {
    cells[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
  }
  return static_cast<int>(sorted.size());
}

/// Color refinement to the coarsest equitable partition finer than `cells`.
/// Each vertex's new key is its old cell followed by its neighbor count in
/// every cell, so cell order is derived from structure alone.
int refine(const Graph& g, Cells& cells, int num_cells) {
  const int n = g.order();
  std::vector<VertexSet> members(static_cast<std::size_t>(num_cells));
  while (true) {
    std::fill(members.begin(), members.end(), 0);
    members.resize(static_cast<std::size_t>(num_cells), 0);
    for (int v = 0; v < n; ++v) members[static_cast<std::size_t>(cells[static_cast<std::size_t>(v)])] |= bit(v);

    std::vector<std::vector<int>> keys(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& key = keys[static_cast<std::size_t>(v)];
      key.reserve(static_cast<std::size_t>(num_cells) + 1);
      key.push_back(cells[static_cast<std::size_t>(v)]);
      for (VertexSet m : members) key.push_back(std::popcount(g.row(v) & m));
    }
    const int next = rank_by(keys, cells);
    if (next == num_cells) return num_cells;
    num_cells = next;
  }
}

bool twins(const Graph& g, Vertex u, Vertex v) {
  return (g.row(u) & ~bit(v)) == (g.row(v) & ~bit(u));
}

class Canonizer {
 public:
  Canonizer(const Graph& g, std::span<const int> colors) : g_(g), colors_(colors.begin(), colors.end()) {
    if (colors_.empty()) colors_.assign(static_cast<std::size_t>(g.order()), 0);
    if (static_cast<int>(colors_.size()) != g.order()) {
      throw Error(ErrorCode::InvalidArgument, "color vector size does not match graph order");
    }
  }

  CanonicalLabeling run() {
    Cells cells(colors_.size());
    const int num_cells = rank_by(colors_, cells);
    explore(cells, num_cells);
    return std::move(*best_);
  }

 private:
  void explore(Cells cells, int num_cells) {
    const int n = g_.order();
    num_cells = refine(g_, cells, num_cells);
    if (num_cells == n) {
      consider_leaf(cells);
      return;
    }

    std::vector<int> cell_size(static_cast<std::size_t>(num_cells), 0);
    for (int c : cells) ++cell_size[static_cast<std::size_t>(c)];
    int target = 0;
    while (cell_size[static_cast<std::size_t>(target)] == 1) ++target;

    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n; ++v) {
      if (cells[static_cast<std::size_t>(v)] != target) continue;
      // Swapping twins in the same cell is an automorphism preserving the
      // partition, so their subtrees produce the same leaves.
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(g_, u, v); })) continue;
      tried.push_back(v);

      std::vector<std::pair<int, int>> keys(static_cast<std::size_t>(n));
      for (Vertex u = 0; u < n; ++u) keys[static_cast<std::size_t>(u)] = {cells[static_cast<std::size_t>(u)], u == v ? 0 : 1};
      Cells child(static_cast<std::size_t>(n));
      const int child_cells = rank_by(keys, child);
      explore(std::move(child), child_cells);
    }
  }

  void consider_leaf(const Cells& perm) {
    const int n = g_.order();
    Certificate cert;
    cert.colors.assign(static_cast<std::size_t>(n), 0);
    cert.rows.assign(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) {
      const auto pv = static_cast<std::size_t>(perm[static_cast<std::size_t>(v)]);
      cert.colors[pv] = colors_[static_cast<std::size_t>(v)];
      for (VertexSet r = g_.row(v); r != 0; r &= r - 1) {
        cert.rows[pv] |= bit(perm[static_cast<std::size_t>(std::countr_zero(r))]);
      }
    }
    if (!best_ || cert < best_->certificate) {
      best_ = CanonicalLabeling{perm, std::move(cert)};
    }
  }

  const Graph& g_;
  std::vector<int> colors_;
  std::optional<CanonicalLabeling> best_;
};

Graph graph_from_rows(std::span<const VertexSet> rows) {
  Graph g(static_cast<int>(rows.size()));
  for (std::size_t u = 0; u < rows.size(); ++u) {
    for (VertexSet r = rows[u]; r != 0; r &= r - 1) {
      const int v = std::countr_zero(r);
      if (static_cast<std::size_t>(v) > u) g.add_edge(static_cast<Vertex>(u), v);
    }
  }
  return g;
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors) {
  if (g.order() == 0) return {};
  return Canonizer(g, colors).run();
}

std::vector<int> role_colors(const Graph& g, const RoleLabeling& roles, bool inputs_ordered) {
  std::vector<int> colors(static_cast<std::size_t>(g.order()), 0);
  colors[static_cast<std::size_t>(roles.anchor)] = 1;
  colors[static_cast<std::size_t>(roles.output)] = 2;
  for (std::size_t j = 0; j < roles.inputs.size(); ++j) {
    colors[static_cast<std::size_t>(roles.inputs[j])] = inputs_ordered ? 3 + static_cast<int>(j) : 3;
  }
  return colors;
}

bool roles_isomorphic(const Graph& g1, const RoleLabeling& r1, const Graph& g2, const RoleLabeling& r2,
                      bool inputs_ordered) {
  if (r1.arity() != r2.arity()) {
    throw Error(ErrorCode::ArityMismatch,
                "input arity " + std::to_string(r1.arity()) + " vs " + std::to_string(r2.arity()));
  }
  validate_roles(g1, r1);
  validate_roles(g2, r2);
  if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return false;
  const auto c1 = canonical_labeling(g1, role_colors(g1, r1, inputs_ordered));
  const auto c2 = canonical_labeling(g2, role_colors(g2, r2, inputs_ordered));
  return c1.certificate == c2.certificate;
}

std::vector<Graph> extend_connected(std::span<const Graph> order_m) {
  std::set<std::vector<VertexSet>> seen;
  for (const Graph& base : order_m) {
    const int m = base.order();
    if (m + 1 > kMaxVertices) throw Error(ErrorCode::OrderOverflow, "cannot extend beyond 32 vertices");
    for (VertexSet nbrs = 1; nbrs < bit(m); ++nbrs) {
      Graph g = base;
      const Vertex fresh = g.add_vertex();
      for (VertexSet r = nbrs; r != 0; r &= r - 1) g.add_edge(fresh, std::countr_zero(r));
      seen.insert(canonical_labeling(g).certificate.rows);
    }
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (const auto& rows : seen) out.push_back(graph_from_rows(rows));
  return out;
}

std::vector<Graph> generate_connected(int n) {
  if (n < 1 || n > 7) {
    throw Error(ErrorCode::SizeUnsupported,
                "built-in generation covers 1..7 vertices; pipe a graph6 stream for order " + std::to_string(n));
  }
  std::vector<Graph> graphs{Graph(1)};
  for (int m = 1; m < n; ++m) graphs = extend_connected(graphs);
  return graphs;
}

}  // namespace ladget
