#include "mdred/decomposition.hpp"

#include <algorithm>

namespace mdred {

DecompositionCheck validate_path_decomposition(const LabeledGraph& g, std::span<const Bag> bags) {
  auto fail = [](DecompositionFault f, VertexId u, VertexId w, std::size_t bag, std::string msg) {
    return DecompositionCheck{std::nullopt, DecompositionViolation{f, u, w, bag, std::move(msg)}};
  };
  if (bags.empty()) return fail(DecompositionFault::NoBags, -1, -1, 0, "no bags");

  const std::size_t n = g.vertex_count();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> first(n, kNone);
  std::vector<std::size_t> last(n, kNone);
  std::vector<std::size_t> seen(n, 0);
  std::size_t widest = 0;

  for (std::size_t b = 0; b < bags.size(); ++b) {
    widest = std::max(widest, bags[b].size());
    for (VertexId v : bags[b]) {
      if (!g.contains(v)) {
        return fail(DecompositionFault::UnknownVertex, v, -1, b,
                    "bag " + std::to_string(b) + " names unknown vertex " + std::to_string(v));
      }
      if (last[v] == b) {
        return fail(DecompositionFault::RepeatedInBag, v, -1, b,
                    g.label(v).to_string() + " repeated in bag " + std::to_string(b));
      }
      if (first[v] == kNone) first[v] = b;
      last[v] = b;
      ++seen[v];
    }
  }

  for (VertexId v = 0; static_cast<std::size_t>(v) < n; ++v) {
    if (first[v] == kNone) {
      return fail(DecompositionFault::MissingVertex, v, -1, 0, g.label(v).to_string() + " in no bag");
    }
    if (seen[v] != last[v] - first[v] + 1) {
      return fail(DecompositionFault::NotContiguous, v, -1, first[v],
                  g.label(v).to_string() + " occurs in a non-contiguous run of bags");
    }
  }

  // With contiguous runs, an edge is covered iff the two runs overlap.
  for (const Edge& e : g.edges()) {
    if (std::max(first[e.u], first[e.w]) > std::min(last[e.u], last[e.w])) {
      return fail(DecompositionFault::UncoveredEdge, e.u, e.w, 0,
                  "edge " + g.label(e.u).to_string() + " - " + g.label(e.w).to_string() +
                      " in no bag");
    }
  }
  return {static_cast<int>(widest) - 1, std::nullopt};
}

}  // namespace mdred
