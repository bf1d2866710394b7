#include <doctest.h>

#include <set>

#include "ladget/canonical.hpp"
#include "ladget/fixtures.hpp"
#include "ladget/graph6.hpp"
#include "support.hpp"

using namespace ladget;

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t automorphisms(const Graph& g) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    if (g.relabeled(perm) == g) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// Labeled connected graphs on n vertices, by scanning every edge subset.
std::uint64_t labeled_connected(int n) {
  const int pairs = n * (n - 1) / 2;
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    Graph g(n);
    for (int i = 0; i < pairs; ++i) {
      if ((mask >> i) & 1U) g.add_edge(slots[static_cast<std::size_t>(i)].first, slots[static_cast<std::size_t>(i)].second);
    }
    if (g.connected()) ++count;
  }
  return count;
}

}  // namespace

TEST_SUITE("canonical") {
  TEST_CASE("connected graph counts") {
    const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
      const auto graphs = generate_connected(n);
      CHECK(graphs.size() == expected[static_cast<std::size_t>(n - 1)]);
      for (const auto& g : graphs) {
        CHECK(g.order() == n);
        CHECK(g.connected());
      }
    }
    CHECK_THROWS_AS(generate_connected(8), Error);
    CHECK_THROWS_AS(generate_connected(0), Error);
  }

  TEST_CASE("orbit-stabilizer oracle on 6 vertices") {
    // Sum of n!/|Aut(G)| over one graph per class counts labeled graphs.
    const auto graphs = generate_connected(6);
    std::uint64_t labeled = 0;
    for (const auto& g : graphs) labeled += factorial(6) / automorphisms(g);
    CHECK(labeled == labeled_connected(6));
    CHECK(labeled == 26704);
  }

  TEST_CASE("orbit-stabilizer oracle on 7 vertices") {
    const auto graphs = generate_connected(7);
    std::uint64_t labeled = 0;
    for (const auto& g : graphs) labeled += factorial(7) / automorphisms(g);
    CHECK(labeled == 1866256);
  }

  TEST_CASE("certificate is invariant under relabeling") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
      const int n = 2 + static_cast<int>(rng() % 11);
      const Graph g = test::random_graph(rng, n, 0.45);
      const auto perm = test::random_perm(rng, n);
      CHECK(canonical_labeling(g).certificate == canonical_labeling(g.relabeled(perm)).certificate);
    }
  }

  TEST_CASE("canonical relabeling reproduces the certificate") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 100; ++i) {
      const Graph g = test::random_graph(rng, 9, 0.5);
      const auto lab = canonical_labeling(g);
      const Graph c = g.relabeled(lab.perm);
      for (Vertex v = 0; v < 9; ++v) CHECK(c.row(v) == lab.certificate.rows[static_cast<std::size_t>(v)]);
    }
  }

  TEST_CASE("extend to 8 vertices gives distinct classes") {
    const auto seven = generate_connected(7);
    const auto eight = extend_connected(seven);
    CHECK(eight.size() == 11117);
    std::set<std::string> text;
    for (const auto& g : eight) text.insert(encode_graph6(g));
    CHECK(text.size() == eight.size());
  }

  TEST_CASE("roles_isomorphic examples") {
    const auto nott = builtin("NOT");
    CHECK(roles_isomorphic(nott.graph, nott.roles, nott.graph, nott.roles, false));

    RoleLabeling swapped = nott.roles;
    std::swap(swapped.inputs[0], swapped.output);
    CHECK(roles_isomorphic(nott.graph, nott.roles, nott.graph, swapped, false));

    const Graph a = decode_graph6("FCZeO");
    const Graph b = decode_graph6("FCZUO");
    CHECK_FALSE(roles_isomorphic(a, {3, {2, 6}, 4}, b, {2, {1, 3}, 5}, false));

    CHECK_THROWS_AS(roles_isomorphic(a, {3, {2, 6}, 4}, a, {3, {2}, 4}, false), Error);
  }

  TEST_CASE("roles_isomorphic agrees with permutation oracle") {
    std::mt19937_64 rng(21);
    int positives = 0;
    for (int i = 0; i < 400; ++i) {
      const int n = 4 + static_cast<int>(rng() % 4);
      const Graph g = test::random_graph(rng, n, 0.5);
      const auto pick = test::random_perm(rng, n);
      const RoleLabeling r1{pick[0], {pick[1], pick[2]}, pick[3]};
      Graph h = g;
      RoleLabeling r2 = r1;
      if (rng() % 2) {
        const auto perm = test::random_perm(rng, n);
        h = g.relabeled(perm);
        r2 = test::permute_roles(r1, perm);
        if (rng() % 2) std::swap(r2.inputs[0], r2.inputs[1]);
      } else {
        const auto other = test::random_perm(rng, n);
        r2 = RoleLabeling{other[0], {other[1], other[2]}, other[3]};
      }
      for (bool ordered : {false, true}) {
        const bool fast = roles_isomorphic(g, r1, h, r2, ordered);
        CHECK(fast == test::brute_roles_isomorphic(g, r1, h, r2, ordered));
        positives += fast ? 1 : 0;
      }
    }
    CHECK(positives > 100);
  }

  TEST_CASE("roles_isomorphic is an equivalence relation on a sample") {
    std::mt19937_64 rng(5);
    const Graph g = decode_graph6("FCZeO");
    std::vector<std::pair<Graph, RoleLabeling>> items;
    for (int i = 0; i < 30; ++i) {
      const auto perm = test::random_perm(rng, 7);
      const auto pick = test::random_perm(rng, 7);
      items.emplace_back(g.relabeled(perm), RoleLabeling{pick[0], {pick[1], pick[2]}, pick[3]});
    }
    for (const auto& [ga, ra] : items) {
      CHECK(roles_isomorphic(ga, ra, ga, ra, false));
      for (const auto& [gb, rb] : items) {
        const bool ab = roles_isomorphic(ga, ra, gb, rb, false);
        CHECK(ab == roles_isomorphic(gb, rb, ga, ra, false));
        if (!ab) continue;
        for (const auto& [gc, rc] : items) {
          if (roles_isomorphic(gb, rb, gc, rc, false)) CHECK(roles_isomorphic(ga, ra, gc, rc, false));
        }
      }
    }
  }
}
