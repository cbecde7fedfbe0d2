#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "mdred/graph.hpp"
#include "mdred/mrs.hpp"
#include "mdred/report.hpp"
#include "mdred/tdm.hpp"

namespace mdred {

/// Triangle whose two degree-2 vertices are false twins. For most gadgets the
/// connector is an existing path vertex; the two per-pair gadgets get a fresh
/// connector wired to four existing vertices.
struct ForcedVertexGadget {
  std::string id;
  VertexId twin1 = 0;
  VertexId twin2 = 0;
  VertexId connector = 0;
  bool connector_is_new = false;
  std::vector<VertexId> attached_to;
};

struct ForcedSetAnchor {
  VertexId p = 0;
  VertexId q = 0;
  VertexId pi = 0;
};

struct MdInstance {
  LabeledGraph graph;  // G'
  long long k = 0;
  MrsInstance base;  // G; its vertex ids coincide with those of G'
  std::vector<std::array<ForcedSetAnchor, 2>> anchors;       // [i-1][h-1]
  std::vector<ForcedVertexGadget> gadgets;
  std::vector<std::vector<std::array<VertexId, 2>>> mids;    // [i-1][j-1][h-1]

  const MrsLayout& layout() const noexcept { return base.layout; }
  int n() const noexcept { return base.layout.n; }
  int m() const noexcept { return base.layout.m; }
  const ForcedSetAnchor& anchor(int i, int h) const { return anchors.at(i - 1).at(h - 1); }
  /// mid(P^h(i,j,p_i^{3-h}))
  VertexId mid(int i, int j, int h) const { return mids.at(i - 1).at(j - 1).at(h - 1); }
};

// Canonical path ids of the second construction stage.
std::string forced_path_id(int i, int j, int h);                 // P(s[i,j],p[i,h])
std::string pi_path_id(int h, int i, int j, char hub, int r);    // P[h](i,j,a[r])
std::string pi_cross_path_id(int h, int i, int j);               // P[h](i,j,p[i,3-h])
std::string pi_hub_path_id(int i, int h, char hub, int r);       // P(pi[i,h],a[r])
std::string l_path_id(int i, int j, int h);                      // P(q[i,h],mid(P[3-h](i,j,p[i,h])))

inline long long md_budget(long long n, long long m) { return 34 * n * m + 19 * n; }
inline long long md_gadget_count(long long n, long long m) { return 34 * n * m + 18 * n; }

/// Builds G' on top of G and self-checks the structural invariants (budget,
/// gadget count, anchor adjacency, path lengths, twin degrees, connectivity).
/// Throws ConstructionError naming the violated clause.
MdInstance build_md(const ThreeDMInstance& inst);

struct MdStats {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  long long k = 0;
  std::size_t gadget_count = 0;
  std::size_t path_count = 0;
};

MdStats md_stats(const MdInstance& md);

/// dist_{G'}(s, u/v) == dist_G(s, u/v) for every selector and pair vertex.
Report verify_distance_preservation(const MdInstance& md);
Report verify_distance_preservation(const LabeledGraph& g_prime, const MrsInstance& base);

/// Sidecar: param/hub/xset/pair/anchor/mid/twin records.
void write_md_meta(std::ostream& out, const MdInstance& md);

}  // namespace mdred
