#include <doctest.h>

#include <set>

#include "ladget/embed.hpp"
#include "ladget/fixtures.hpp"

using namespace ladget;

namespace {

TruthTable table_of(const GadgetConfig& cfg) { return *judge_mapping(compute_mapping(cfg)).table; }

/// Package colors are distinct, avoid 0 and the input colors; the original
/// vertices use at most three colors. Checked on every coloring with the
/// anchor at 0.
bool package_invariants_hold(const EmbeddedLadget& e, int original_order) {
  bool ok = true;
  std::size_t seen = 0;
  for_each_coloring(e.config.graph, {{e.config.roles.anchor, 0}}, e.config.k, [&](const Coloring& c) {
    ++seen;
    std::set<Color> package_colors;
    for (Vertex p : e.package) package_colors.insert(c[static_cast<std::size_t>(p)]);
    if (package_colors.size() != e.package.size() || package_colors.count(0)) ok = false;
    for (Vertex i : e.config.roles.inputs) {
      if (package_colors.count(c[static_cast<std::size_t>(i)])) ok = false;
    }
    std::set<Color> original;
    for (Vertex v = 0; v < original_order; ++v) original.insert(c[static_cast<std::size_t>(v)]);
    if (original.size() > 3) ok = false;
    return ok;
  });
  return ok && seen > 0;
}

}  // namespace

TEST_SUITE("embed") {
  TEST_CASE("construction") {
    const auto nott = builtin("NOT");
    const auto e5 = embed_to_k(nott, 5);
    CHECK(e5.config.graph.order() == 6);
    CHECK(e5.package == std::vector<Vertex>{4, 5});
    CHECK(e5.config.k == 5);
    CHECK(e5.config.roles == nott.roles);
    CHECK(e5.config.graph.has_edge(4, 5));
    for (Vertex v = 0; v < 4; ++v) {
      CHECK(e5.config.graph.has_edge(v, 4));
      CHECK(e5.config.graph.has_edge(v, 5));
    }
    CHECK(e5.config.graph.edge_count() == 4 + 1 + 8);

    const auto same = embed_to_k(nott, 3);
    CHECK(same.config.graph == nott.graph);
    CHECK(same.package.empty());

    const auto nand = builtin("NAND7");
    const auto e4 = embed_to_k(nand, 4);
    CHECK(e4.config.graph.order() == 8);
    CHECK(e4.config.graph.degree(7) == 7);
  }

  TEST_CASE("preconditions") {
    GadgetConfig three{Graph(6, {{1, 4}, {2, 4}, {3, 4}}), {0, {1, 2, 3}, 5}, 3};
    try {
      embed_to_k(three, 4);
      FAIL("three inputs accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::TooManyInputs);
    }
    try {
      embed_to_k(builtin("NAND7"), 30);
      FAIL("order overflow accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::OrderOverflow);
    }
    CHECK_THROWS_AS(embed_to_k(builtin("NOT"), 2), Error);
    auto four = builtin("NOT");
    four.k = 4;
    CHECK_THROWS_AS(embed_to_k(four, 5), Error);
  }

  TEST_CASE("NOT keeps its truth table at k = 4, 5, 6") {
    const auto nott = builtin("NOT");
    const auto tt = table_of(nott);
    for (int k : {4, 5, 6}) {
      const auto e = embed_to_k(nott, k);
      const auto v = verify_embedding(e, tt);
      CHECK(v.pass);
      CHECK(*v.table == tt);
      CHECK(package_invariants_hold(e, 4));
    }
  }

  TEST_CASE("NAND7 keeps its truth table at k = 4, 5") {
    const auto nand = builtin("NAND7");
    const auto tt = table_of(nand);
    for (int k : {4, 5}) {
      const auto e = embed_to_k(nand, k);
      CHECK(verify_embedding(e, tt).pass);
      CHECK(package_invariants_hold(e, 7));
    }
  }

  TEST_CASE("mismatched truth table fails") {
    const auto e = embed_to_k(builtin("NOT"), 4);
    CHECK_FALSE(verify_embedding(e, TruthTable::from_string("01")).pass);
  }

  TEST_CASE("negative control: one package edge removed") {
    const auto nott = builtin("NOT");
    auto e = embed_to_k(nott, 5);
    e.config.graph.remove_edge(e.package[0], nott.roles.inputs[0]);
    const auto v = verify_embedding(e, table_of(nott));
    MESSAGE("corrupted NOT into 5 colors: universal=" << v.universal << " consistent=" << v.consistent
                                                     << " pass=" << v.pass);
  }
}
