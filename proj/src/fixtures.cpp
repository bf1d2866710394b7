#include "ladget/fixtures.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

namespace ladget {
namespace {

// Vertex ids are the figure's node numbers minus one. MOV and KNOT are
// drawn without an anchor, so they get an isolated anchor appended.

GadgetConfig mov() {
  Graph g(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 2}});
  return {g, {4, {0}, 3}, 3};
}

GadgetConfig not_gate() {
  Graph g(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
  return {g, {0, {2}, 3}, 3};
}

GadgetConfig knot() {
  // Inputs are (k, i).
  Graph g(5, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
  return {g, {4, {0, 2}, 3}, 3};
}

GadgetConfig rot() {
  Graph g(3, {{0, 1}, {1, 2}});
  return {g, {2, {0}, 1}, 3};
}

GadgetConfig rots() {
  Graph g(7, {{0, 1}, {0, 2}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 6}, {2, 3}, {2, 5}, {6, 5}, {6, 3}});
  return {g, {6, {2}, 4}, 3};
}

GadgetConfig nand7() {
  Graph g(7, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5}, {6, 4}, {6, 5}});
  return {g, {0, {2, 6}, 4}, 3};
}

GadgetConfig or8() {
  Graph g(8, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5}, {6, 4}, {6, 5}, {7, 2}, {7, 4}});
  return {g, {0, {3, 6}, 7}, 3};
}

GadgetConfig and8() {
  Graph g(8, {{0, 2}, {0, 3}, {1, 2}, {1, 4}, {3, 4}, {3, 7}, {4, 5}, {6, 7}, {6, 5}, {6, 2}, {7, 2}});
  return {g, {5, {0, 1}, 7}, 3};
}

Graph xor_graph() {
  return Graph(10, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 4}, {5, 6}, {3, 7}, {6, 8}, {4, 8},
                    {5, 7}, {7, 9}, {8, 9}});
}

GadgetConfig xor10() { return {xor_graph(), {0, {6, 9}, 3}, 3}; }

// Same graph with the output moved across the NOT triangle at the bottom.
GadgetConfig xnor10() { return {xor_graph(), {0, {6, 9}, 4}, 3}; }

struct Entry {
  std::string_view name;
  GadgetConfig (*make)();
};

constexpr std::array<Entry, 10> kFixtures = {{
    {"MOV", mov},
    {"NOT", not_gate},
    {"KNOT", knot},
    {"ROT", rot},
    {"ROTS", rots},
    {"NAND7", nand7},
    {"OR8", or8},
    {"AND8", and8},
    {"XOR10", xor10},
    {"XNOR10", xnor10},
}};

}  // namespace

GadgetConfig builtin(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  for (const auto& entry : kFixtures) {
    if (entry.name == upper) return entry.make();
  }
  throw Error(ErrorCode::UnknownFixture, "no built-in gadget named \"" + std::string(name) + "\"");
}

std::vector<std::string_view> builtin_names() {
  std::vector<std::string_view> names;
  for (const auto& entry : kFixtures) names.push_back(entry.name);
  return names;
}

}  // namespace ladget
