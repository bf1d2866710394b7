#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ladget/error.hpp"

namespace ladget {

using Vertex = int;
using VertexSet = std::uint32_t;

inline constexpr int kMaxVertices = 32;

constexpr VertexSet bit(int i) noexcept { return VertexSet{1} << i; }

/// Undirected simple graph on at most 32 vertices. Row i of the adjacency
/// holds the neighbors of vertex i as a bitset.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  int order() const noexcept { return n_; }
  VertexSet row(Vertex v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }
  VertexSet all_vertices() const noexcept {
    return n_ == kMaxVertices ? ~VertexSet{0} : bit(n_) - 1;
  }

  bool has_edge(Vertex u, Vertex v) const noexcept { return (row(u) >> v) & 1U; }
  int degree(Vertex v) const noexcept { return std::popcount(row(v)); }
  int edge_count() const noexcept;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  /// Appends an isolated vertex and returns its id.
  Vertex add_vertex();

  bool connected() const noexcept;

  /// Graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

/// Anchor, ordered inputs and output of a gadget on some graph.
struct RoleLabeling {
  Vertex anchor = 0;
  std::vector<Vertex> inputs;
  Vertex output = 0;

  int arity() const noexcept { return static_cast<int>(inputs.size()); }
  VertexSet role_set() const noexcept;

  friend bool operator==(const RoleLabeling&, const RoleLabeling&) = default;
  friend auto operator<=>(const RoleLabeling& a, const RoleLabeling& b) {
    if (auto c = a.anchor <=> b.anchor; c != 0) return c;
    if (auto c = a.output <=> b.output; c != 0) return c;
    return a.inputs <=> b.inputs;
  }
};

/// Throws InvalidRoles unless all role vertices are distinct and < g.order().
void validate_roles(const Graph& g, const RoleLabeling& roles);

std::string to_string(const RoleLabeling& roles);

}  // namespace ladget
