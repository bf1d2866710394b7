#include <doctest.h>

#include <algorithm>

#include "ladget/coloring.hpp"
#include "ladget/fixtures.hpp"
#include "support.hpp"

using namespace ladget;

namespace {

std::vector<Coloring> sorted(std::vector<Coloring> v) {
  std::sort(v.begin(), v.end());
  return v;
}

const Graph kTriangle(3, {{0, 1}, {0, 2}, {1, 2}});

}  // namespace

TEST_SUITE("coloring") {
  TEST_CASE("enumeration counts") {
    CHECK(enumerate_colorings(kTriangle, {}, 3).size() == 6);
    CHECK(enumerate_colorings(kTriangle, {{0, 0}}, 3).size() == 2);
    CHECK(enumerate_colorings(Graph(3), {}, 3).size() == 27);
    CHECK(enumerate_colorings(Graph(3, {{0, 1}, {1, 2}}), {}, 3).size() == 12);
  }

  TEST_CASE("existence") {
    const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK_FALSE(exists_coloring(k4, {}, 3));
    CHECK(exists_coloring(k4, {}, 4));

    const auto nand = builtin("NAND7");
    for (Color a = 0; a < 3; ++a) {
      for (Color b = 0; b < 3; ++b) {
        CHECK(exists_coloring(nand.graph, {{nand.roles.anchor, 0}, {nand.roles.inputs[0], a}, {nand.roles.inputs[1], b}}, 3));
      }
    }
  }

  TEST_CASE("NOT gadget forces output 0 on input 1") {
    const auto nott = builtin("NOT");
    const auto all = enumerate_colorings(nott.graph, {{nott.roles.anchor, 0}, {nott.roles.inputs[0], 1}}, 3);
    REQUIRE_FALSE(all.empty());
    for (const auto& c : all) CHECK(c[static_cast<std::size_t>(nott.roles.output)] == 0);
  }

  TEST_CASE("inconsistent or invalid fixed pairs") {
    CHECK(enumerate_colorings(kTriangle, {{0, 0}, {0, 1}}, 3).empty());
    CHECK(enumerate_colorings(kTriangle, {{0, 0}, {1, 0}}, 3).empty());
    CHECK(enumerate_colorings(kTriangle, {{0, 1}, {0, 1}}, 3).size() == 2);
    CHECK_THROWS_AS(enumerate_colorings(kTriangle, {{3, 0}}, 3), Error);
    CHECK_THROWS_AS(enumerate_colorings(kTriangle, {{0, 3}}, 3), Error);
    CHECK_THROWS_AS(enumerate_colorings(kTriangle, {}, 0), Error);
  }

  TEST_CASE("visitor can stop early") {
    int seen = 0;
    const bool finished = for_each_coloring(Graph(4), {}, 3, [&](const Coloring&) { return ++seen < 5; });
    CHECK_FALSE(finished);
    CHECK(seen == 5);
  }

  TEST_CASE("every reported coloring is proper and extends the fixed pairs") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
      const Graph g = test::random_graph(rng, 8, 0.35);
      for (const auto& c : enumerate_colorings(g, {{0, 2}}, 3)) {
        CHECK(is_proper(g, c));
        CHECK(c[0] == 2);
      }
    }
  }

  TEST_CASE("backtracking equals brute force") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 500; ++i) {
      const int n = 1 + static_cast<int>(rng() % 10);
      const int k = 2 + static_cast<int>(rng() % 3);
      const Graph g = test::random_graph(rng, n, 0.15 + 0.5 * static_cast<double>(rng() % 100) / 100.0);
      PartialAssignment fixed;
      const int pins = static_cast<int>(rng() % 3);
      for (int p = 0; p < pins; ++p) fixed.fix(static_cast<Vertex>(rng() % static_cast<unsigned>(n)), static_cast<Color>(rng() % static_cast<unsigned>(k)));
      CHECK(sorted(enumerate_colorings(g, fixed, k)) == sorted(oracle_colorings(g, fixed, k)));
      CHECK(exists_coloring(g, fixed, k) == !oracle_colorings(g, fixed, k).empty());
    }
  }

  TEST_CASE("oracle size guard") {
    CHECK_THROWS_AS(oracle_colorings(Graph(20), {}, 3), Error);
  }

  TEST_CASE("color permutation maps colorings to colorings") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 30; ++i) {
      const Graph g = test::random_graph(rng, 7, 0.4);
      const auto all = sorted(enumerate_colorings(g, {}, 3));
      std::vector<Coloring> swapped;
      for (auto c : all) {
        for (auto& x : c) x = x == 1 ? 2 : x == 2 ? 1 : x;
        swapped.push_back(c);
      }
      CHECK(sorted(swapped) == all);
    }
  }
}
