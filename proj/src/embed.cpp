#include "ladget/embed.hpp"

namespace ladget {

EmbeddedLadget embed_to_k(const GadgetConfig& cfg, int k_target) {
  cfg.validate();
  if (cfg.k != 3) throw Error(ErrorCode::InvalidArgument, "embedding starts from a 3-coloring gadget");
  if (cfg.arity() > 2) {
    throw Error(ErrorCode::TooManyInputs, "embedding is defined for at most 2 inputs, got " + std::to_string(cfg.arity()));
  }
  if (k_target < 3) throw Error(ErrorCode::InvalidArgument, "target color count must be at least 3");
  const int original = cfg.graph.order();
  if (original + (k_target - 3) > kMaxVertices) {
    throw Error(ErrorCode::OrderOverflow, "embedding into " + std::to_string(k_target) + " colors needs " +
                                              std::to_string(original + k_target - 3) + " vertices");
  }

  EmbeddedLadget out{cfg, {}};
  out.config.k = k_target;
  Graph& g = out.config.graph;
  for (int i = 0; i < k_target - 3; ++i) {
    const Vertex p = g.add_vertex();
    for (Vertex v = 0; v < original; ++v) g.add_edge(p, v);
    for (Vertex q : out.package) g.add_edge(p, q);
    out.package.push_back(p);
  }
  return out;
}

EmbeddingVerdict verify_embedding(const EmbeddedLadget& embedded, const TruthTable& original) {
  const MappingVerdict verdict = judge_mapping(compute_mapping(embedded.config));
  EmbeddingVerdict out;
  out.universal = verdict.universal;
  out.consistent = verdict.consistent;
  out.table = verdict.table;
  out.pass = verdict.consistent && verdict.table && *verdict.table == original;
  return out;
}

}  // namespace ladget
