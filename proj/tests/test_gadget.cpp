#include <doctest.h>

#include "ladget/fixtures.hpp"
#include "ladget/gadget.hpp"
#include "ladget/graph6.hpp"
#include "ladget/verify.hpp"
#include "support.hpp"

using namespace ladget;

namespace {

constexpr ColorSet kZero = 1, kOne = 2, kTwo = 4;

Color swap12(Color c) { return c == 1 ? 2 : c == 2 ? 1 : c; }

ColorSet swap12(ColorSet s) {
  return (s & 1U) | ((s & 2U) << 1) | ((s & 4U) >> 1) | (s & ~7U);
}

/// M(sigma(t)) == sigma(M(t)) for sigma = (1 2).
bool color_symmetric(const ColorMapping& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto t = m.tuple_of(i);
    for (auto& c : t) c = swap12(c);
    if (m.at(t) != swap12(m[i])) return false;
  }
  return true;
}

GadgetConfig random_config(std::mt19937_64& rng, int n, int arity) {
  const auto pick = test::random_perm(rng, n);
  RoleLabeling roles{pick[0], {}, pick[1]};
  for (int j = 0; j < arity; ++j) roles.inputs.push_back(pick[static_cast<std::size_t>(2 + j)]);
  return {test::random_connected(rng, n, 0.45), roles, 3};
}

}  // namespace

TEST_SUITE("gadget") {
  TEST_CASE("fixture shapes") {
    CHECK(builtin("NOT").graph.order() == 4);
    CHECK(builtin("NOT").graph.edge_count() == 4);
    CHECK(builtin("ROTS").graph.order() == 7);
    CHECK(builtin("ROTS").graph.edge_count() == 11);
    CHECK(builtin("XOR10").graph.order() == 10);
    CHECK(builtin("XOR10").graph.edge_count() == 15);
    CHECK(builtin("nand7").roles == builtin("NAND7").roles);
    CHECK_THROWS_AS(builtin("NOPE"), Error);
  }

  TEST_CASE("primitive mappings") {
    const auto mov = compute_mapping(builtin("MOV"));
    CHECK(mov[0] == kZero);
    CHECK(mov[1] == kOne);
    CHECK(mov[2] == kTwo);

    const auto nott = compute_mapping(builtin("NOT"));
    CHECK(nott[0] == (kOne | kTwo));
    CHECK(nott[1] == kZero);
    CHECK(nott[2] == kZero);

    const auto rot = compute_mapping(builtin("ROT"));
    CHECK(rot[0] == (kOne | kTwo));
    CHECK(rot[1] == kTwo);
    CHECK(rot[2] == kOne);

    const auto rots = builtin("ROTS");
    const auto m = compute_mapping(rots);
    CHECK(m[0] == kZero);
    CHECK(m[1] == kTwo);
    CHECK(m[2] == kOne);

    GadgetConfig reversed = rots;
    std::swap(reversed.roles.inputs[0], reversed.roles.output);
    CHECK(compute_mapping(reversed) == m);
  }

  TEST_CASE("k-NOT mapping") {
    const auto m = compute_mapping(builtin("KNOT"));
    for (Color a = 0; a < 3; ++a) {
      for (Color b = 0; b < 3; ++b) {
        const std::vector<Color> t{a, b};
        const ColorSet expected = a == b ? (7U & ~(1U << a)) : (1U << a);
        CHECK(m.at(t) == expected);
      }
    }
  }

  TEST_CASE("two-input fixtures") {
    CHECK(judge_mapping(compute_mapping(builtin("NAND7"))).table->to_string() == "1110");
    CHECK(judge_mapping(compute_mapping(builtin("OR8"))).table->to_string() == "0111");
    CHECK(judge_mapping(compute_mapping(builtin("AND8"))).table->to_string() == "0001");
    CHECK(judge_mapping(compute_mapping(builtin("XOR10"))).table->to_string() == "0110");
    CHECK(judge_mapping(compute_mapping(builtin("XNOR10"))).table->to_string() == "1001");
    const auto rot = judge_mapping(compute_mapping(builtin("ROT")));
    CHECK(rot.universal);
    CHECK(rot.consistent);
    CHECK(classify(*rot.table).name == FunctionName::Constant);
  }

  TEST_CASE("ColorMapping indexing") {
    ColorMapping m(2, 3);
    CHECK(m.size() == 9);
    CHECK(m.index_of(std::vector<Color>{1, 2}) == 5);
    CHECK(m.tuple_of(5) == std::vector<Color>{1, 2});
    CHECK(format_color_set(kOne | kTwo) == "{1,2}");
    CHECK(format_color_set(kTwo) == "2");
  }

  TEST_CASE("universality") {
    CHECK(check_universality(builtin("NAND7")).pass);

    // Adjacent inputs cannot both be 0.
    GadgetConfig adj{Graph(4, {{1, 2}, {1, 3}, {2, 3}}), {0, {1, 2}, 3}, 3};
    const auto r = check_universality(adj);
    CHECK_FALSE(r.pass);
    CHECK(*r.failing_tuple == std::vector<Color>{0, 0});

    // Anchor next to input: the input can never be 0.
    GadgetConfig anchored{Graph(4, {{0, 1}, {1, 3}, {2, 3}}), {0, {1, 2}, 3}, 3};
    const auto s = check_universality(anchored);
    CHECK_FALSE(s.pass);
    CHECK((*s.failing_tuple)[0] == 0);
  }

  TEST_CASE("consistency") {
    const auto nand = check_consistency(builtin("NAND7"));
    CHECK(nand.pass);
    CHECK(nand.table->to_string() == "1110");
    CHECK_FALSE(nand.witness);

    const auto orr = check_consistency(builtin("OR8"));
    CHECK(orr.table->to_string() == "0111");

    // Isolated anchor and a single edge i-theta: i=1 allows theta in {0,2}.
    GadgetConfig edge{Graph(3, {{1, 2}}), {0, {1}, 2}, 3};
    const auto e = check_consistency(edge);
    CHECK_FALSE(e.pass);
    REQUIRE(e.witness);
    CHECK(e.witness->coloring_false[2] == 0);
    CHECK(e.witness->coloring_true[2] != 0);
    CHECK((e.witness->tuple_false[0] == 0) == (e.witness->tuple_true[0] == 0));
    CHECK(compute_mapping(edge)[1] == (kZero | kTwo));

    GadgetConfig bad{Graph(4, {{1, 2}, {1, 3}, {2, 3}}), {0, {1, 2}, 3}, 3};
    CHECK_THROWS_AS(check_consistency(bad), Error);
  }

  TEST_CASE("classification") {
    CHECK(classify(TruthTable::from_string("1110")).name == FunctionName::Nand);
    CHECK(classify(TruthTable::from_string("0110")).name == FunctionName::Xor);
    CHECK(classify(TruthTable::from_string("1001")).name == FunctionName::Xnor);
    CHECK(classify(TruthTable::from_string("0001")).name == FunctionName::And);
    CHECK(classify(TruthTable::from_string("0111")).name == FunctionName::Or);
    CHECK(classify(TruthTable::from_string("1000")).name == FunctionName::Nor);
    CHECK(classify(TruthTable::from_string("10")).name == FunctionName::Not);
    CHECK(classify(TruthTable::from_string("01")).name == FunctionName::Identity);

    const auto c = classify(TruthTable::from_string("1111"));
    CHECK(c.name == FunctionName::Constant);
    CHECK(c.dependency_mask == 0);
    CHECK_FALSE(c.matches(FunctionName::Constant));

    const auto proj = classify(TruthTable::from_string("0011"));  // reads input 0 only
    CHECK(proj.degenerate);
    CHECK(proj.dependency_mask == 1);
    CHECK(proj.name == FunctionName::Other);

    const auto imp = classify(TruthTable::from_string("1101"));
    CHECK(imp.name == FunctionName::Other);
    CHECK_FALSE(imp.degenerate);

    for (auto f : {FunctionName::And, FunctionName::Or, FunctionName::Nand, FunctionName::Nor, FunctionName::Xor,
                   FunctionName::Xnor}) {
      CHECK(classify(truth_table_of(f, 2)).name == f);
      CHECK(parse_function_name(to_string(f)) == f);
    }
    CHECK(TruthTable::from_string("1110").to_string() == "1110");
    CHECK_THROWS_AS(TruthTable::from_string("111"), Error);
  }

  TEST_CASE("verify_ladget") {
    GadgetConfig nand{decode_graph6("FCZeO"), {3, {2, 6}, 4}, 3};
    CHECK(verify_ladget(nand, FunctionName::Nand).passed());
    CHECK_FALSE(verify_ladget(nand, FunctionName::And).passed());
    CHECK(verify_ladget(nand, FunctionName::Nand, {.minimal_mode = true}).passed());

    const Graph h = decode_graph6("I?`DU_[X_");
    CHECK(verify_ladget({h, {2, {0, 3}, 1}, 3}, FunctionName::Xnor).passed());
    CHECK(verify_ladget({h, {2, {0, 3}, 5}, 3}, FunctionName::Xor).passed());

    const auto rot = verify_ladget(builtin("ROT"));
    CHECK(rot.universality->pass);
    CHECK_FALSE(rot.passed());

    GadgetConfig k3{decode_graph6("Bw"), {0, {1}, 2}, 3};
    const auto r = verify_ladget(k3);
    CHECK_FALSE(r.passed());
    CHECK_FALSE(r.structural.pass);
    CHECK_FALSE(r.universality->pass);
    CHECK_FALSE(verify_ladget(k3, std::nullopt, {.minimal_mode = true}).universality);
  }

  TEST_CASE("both mapping routes agree") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
      auto cfg = random_config(rng, 4 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 2));
      cfg.k = 3 + static_cast<int>(rng() % 2);
      CHECK(compute_mapping(cfg) == compute_mapping_by_enumeration(cfg));
    }
  }

  TEST_CASE("color symmetry (1 2)") {
    for (auto name : builtin_names()) CHECK(color_symmetric(compute_mapping(builtin(name))));
    std::mt19937_64 rng(41);
    for (int i = 0; i < 100; ++i) CHECK(color_symmetric(compute_mapping(random_config(rng, 7, 2))));
  }

  TEST_CASE("mapping is invariant under relabeling") {
    std::mt19937_64 rng(51);
    for (auto name : builtin_names()) {
      const auto cfg = builtin(name);
      const auto perm = test::random_perm(rng, cfg.graph.order());
      const GadgetConfig moved{cfg.graph.relabeled(perm), test::permute_roles(cfg.roles, perm), 3};
      CHECK(compute_mapping(moved) == compute_mapping(cfg));
    }
  }

  TEST_CASE("config validation") {
    CHECK_THROWS_AS(compute_mapping({Graph(3), {0, {1}, 1}, 3}), Error);
    CHECK_THROWS_AS(compute_mapping({Graph(3), {0, {1}, 2}, 2}), Error);
    CHECK_THROWS_AS(compute_mapping({Graph(3), {0, {}, 2}, 3}), Error);
  }
}
