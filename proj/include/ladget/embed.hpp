#pragma once

#include <vector>

#include "ladget/gadget.hpp"

namespace ladget {

/// A 3-coloring ladget joined to a complete "package" graph so that it
/// behaves identically under k-coloring.
struct EmbeddedLadget {
  GadgetConfig config;          // color count is the target k
  std::vector<Vertex> package;  // ids appended after the original vertices
};

/// Adds k_target - 3 pairwise adjacent vertices, each joined to every
/// original vertex. Roles are untouched. Throws TooManyInputs for more than
/// two inputs, OrderOverflow past 32 vertices, InvalidArgument for k < 3 or
/// a source that is not 3-colored.
EmbeddedLadget embed_to_k(const GadgetConfig& cfg, int k_target);

struct EmbeddingVerdict {
  bool pass = false;
  bool universal = false;
  bool consistent = false;
  std::optional<TruthTable> table;  // set when consistent
};

/// Universality and consistency under the embedded color count (0 is false,
/// every other color true), then a truth-table comparison with original.
EmbeddingVerdict verify_embedding(const EmbeddedLadget& embedded, const TruthTable& original);

}  // namespace ladget
