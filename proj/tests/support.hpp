#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "ladget/graph.hpp"

namespace ladget::test {

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution edge(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (edge(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

/// Rejection-samples a connected labeled graph.
inline Graph random_connected(std::mt19937_64& rng, int n, double p) {
  while (true) {
    Graph g = random_graph(rng, n, p);
    if (g.connected()) return g;
  }
}

inline std::vector<Vertex> random_perm(std::mt19937_64& rng, int n) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline RoleLabeling permute_roles(const RoleLabeling& r, const std::vector<Vertex>& perm) {
  RoleLabeling out{perm[static_cast<std::size_t>(r.anchor)], {}, perm[static_cast<std::size_t>(r.output)]};
  for (Vertex v : r.inputs) out.inputs.push_back(perm[static_cast<std::size_t>(v)]);
  return out;
}

/// Brute-force role-preserving isomorphism test over all n! bijections.
inline bool brute_roles_isomorphic(const Graph& g1, const RoleLabeling& r1, const Graph& g2, const RoleLabeling& r2,
                                   bool ordered) {
  const int n = g1.order();
  if (n != g2.order()) return false;
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const RoleLabeling mapped = permute_roles(r1, perm);
    if (mapped.anchor != r2.anchor || mapped.output != r2.output) continue;
    auto a = mapped.inputs;
    auto b = r2.inputs;
    if (!ordered) {
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
    }
    if (a != b) continue;
    if (g1.relabeled(perm) == g2) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace ladget::test
