#include "ladget/graph.hpp"

#include <sstream>

namespace ladget {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorCode::InvalidGraph,
                "vertex count " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
  }
}

Graph::Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw Error(ErrorCode::InvalidGraph,
                "vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
  }
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorCode::InvalidGraph, "self-loop at vertex " + std::to_string(u));
  adj_[static_cast<std::size_t>(u)] |= bit(v);
  adj_[static_cast<std::size_t>(v)] |= bit(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  adj_[static_cast<std::size_t>(u)] &= ~bit(v);
  adj_[static_cast<std::size_t>(v)] &= ~bit(u);
}

Vertex Graph::add_vertex() {
  if (n_ == kMaxVertices) {
    throw Error(ErrorCode::OrderOverflow, "graph already has " + std::to_string(kMaxVertices) + " vertices");
  }
  return n_++;
}

int Graph::edge_count() const noexcept {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u) {
    const VertexSet above = u + 1 >= kMaxVertices ? 0 : ~VertexSet{0} << (u + 1);
    for (VertexSet rest = row(u) & above; rest != 0; rest &= rest - 1) {
      out.emplace_back(u, std::countr_zero(rest));
    }
  }
  return out;
}

bool Graph::connected() const noexcept {
  if (n_ <= 1) return true;
  VertexSet seen = bit(0);
  VertexSet frontier = bit(0);
  while (frontier != 0) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f != 0; f &= f - 1) next |= row(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all_vertices();
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw Error(ErrorCode::InvalidArgument, "permutation size does not match graph order");
  }
  Graph out(n_);
  for (auto [u, v] : edges()) out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return out;
}

VertexSet RoleLabeling::role_set() const noexcept {
  VertexSet s = bit(anchor) | bit(output);
  for (Vertex v : inputs) s |= bit(v);
  return s;
}

void validate_roles(const Graph& g, const RoleLabeling& roles) {
  const int n = g.order();
  auto in_range = [n](Vertex v) { return v >= 0 && v < n; };
  if (!in_range(roles.anchor) || !in_range(roles.output)) {
    throw Error(ErrorCode::InvalidRoles, "role vertex out of range for order " + std::to_string(n));
  }
  VertexSet seen = bit(roles.anchor);
  auto claim = [&](Vertex v) {
    if (!in_range(v)) {
      throw Error(ErrorCode::InvalidRoles, "input vertex " + std::to_string(v) + " out of range");
    }
    if (seen & bit(v)) {
      throw Error(ErrorCode::InvalidRoles, "vertex " + std::to_string(v) + " holds two roles");
    }
    seen |= bit(v);
  };
  claim(roles.output);
  for (Vertex v : roles.inputs) claim(v);
  if (roles.inputs.empty()) throw Error(ErrorCode::InvalidRoles, "gadget needs at least one input");
}

std::string to_string(const RoleLabeling& roles) {
  std::ostringstream os;
  os << "a0=" << roles.anchor << " theta=" << roles.output << " inputs=(";
  for (std::size_t j = 0; j < roles.inputs.size(); ++j) os << (j ? "," : "") << roles.inputs[j];
  os << ')';
  return os.str();
}

}  // namespace ladget
