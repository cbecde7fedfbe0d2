#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdred/graph.hpp"
#include "mdred/report.hpp"
#include "mdred/tdm.hpp"

namespace mdred {

/// One listed pair {u_r^i, v_r^i}.
struct PairIds {
  int r = 0;
  int index = 0;
  VertexId u = 0;
  VertexId v = 0;
};

/// Vertex bookkeeping of the multicolored resolving set graph. Ids stay valid
/// in every graph built on top of it.
struct MrsLayout {
  int n = 0;
  int m = 0;
  int M = 0;                                  // 40(n+1)
  std::vector<std::vector<VertexId>> classes;  // classes[i-1][j-1] = s_i^j
  std::vector<PairIds> pairs;                  // r-major, then i
  std::array<VertexId, 9> hubs{};              // a1 b1 c1 a2 b2 c2 a3 b3 c3

  VertexId selector(int i, int j) const { return classes.at(i - 1).at(j - 1); }
  VertexId hub_a(int r) const { return hubs.at(3 * (r - 1)); }
  VertexId hub_b(int r) const { return hubs.at(3 * (r - 1) + 1); }
  VertexId hub_c(int r) const { return hubs.at(3 * (r - 1) + 2); }
  const PairIds& pair(int r, int i) const { return pairs.at((r - 1) * n + (i - 1)); }
};

struct MrsInstance {
  LabeledGraph graph;
  MrsLayout layout;
};

// Canonical path ids.
std::string selector_path_id(int i, int j, char hub, int r);  // P(s[i,j],a[r])
std::string pair_path_id(char side, int r, int i, char hub);   // P(u[r,i],b[r])

/// Adds the selector, hub and pair vertices and all hub paths to `b`.
MrsLayout populate_mrs(GraphBuilder& b, const ThreeDMInstance& inst);

/// Every selector-to-hub and pair-to-hub distance equals its path length.
/// Needs only the nine BFS runs from the hubs.
Report verify_distance_identities(const LabeledGraph& g, const MrsLayout& layout,
                                  const ThreeDMInstance& inst);

/// Builds G and self-checks the distance identities; throws
/// ConstructionError naming the first violated identity.
MrsInstance build_mrs(const ThreeDMInstance& inst);

/// s_i^j resolves {u_r^x, v_r^x} exactly when (r,x) belongs to tuple j.
Report verify_lemma_resolve(const MrsInstance& mrs, const ThreeDMInstance& inst);

/// One vertex per class and every listed pair resolved.
Verdict check_mrs_solution(const MrsInstance& mrs, std::span<const VertexId> set);

inline constexpr long long kMrsSelectionLimit = 1'000'000;

/// Exhaustive over the m^n one-per-class selections (guarded by
/// kMrsSelectionLimit). Returns j per class, 1-based.
std::optional<std::vector<int>> solve_mrs(const MrsInstance& mrs);

std::vector<VertexId> selection_vertices(const MrsLayout& layout, const std::vector<int>& selection);

struct FvsResult {
  bool acyclic = true;
  std::optional<Edge> cycle_edge;  // an edge closing a cycle
  std::size_t components = 0;      // trees in the forest
};

/// Checks that g minus `removed` is a forest.
FvsResult verify_fvs(const LabeledGraph& g, std::span<const VertexId> removed);
FvsResult verify_fvs(const MrsInstance& mrs);

/// Sidecar: param/hub/xset/pair records.
void write_mrs_meta(std::ostream& out, const MrsLayout& layout);

}  // namespace mdred
