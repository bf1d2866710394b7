// Reads every connected graph of one order (graph6, one per line) and
// writes every connected graph of the next order, one per isomorphism
// class. Chain it to build streams past the built-in generator:
//   ladget-extend --gen 7 | ladget search - --target AND,OR
#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "ladget/canonical.hpp"
#include "ladget/graph6.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Extend a complete list of connected graphs by one vertex", "ladget-extend"};
  int gen = 0;
  int steps = 1;
  app.add_option("--gen", gen, "start from built-in generation of this order instead of standard input")
      ->check(CLI::Range(1, 7));
  app.add_option("--steps", steps, "number of vertices to add")->check(CLI::Range(1, 4));
  CLI11_PARSE(app, argc, argv);

  try {
    std::vector<ladget::Graph> graphs;
    if (gen > 0) {
      graphs = ladget::generate_connected(gen);
    } else {
      std::string line;
      while (std::getline(std::cin, line)) {
        if (!line.empty()) graphs.push_back(ladget::decode_graph6(line));
      }
    }
    for (int i = 0; i < steps; ++i) graphs = ladget::extend_connected(graphs);
    for (const auto& g : graphs) std::cout << ladget::encode_graph6(g) << '\n';
  } catch (const ladget::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
