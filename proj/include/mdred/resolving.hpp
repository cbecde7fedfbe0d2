#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mdred/graph.hpp"

namespace mdred {

/// dist(w,x) != dist(w,y). Throws ArgumentError when x == y.
bool resolves(const LabeledGraph& g, VertexId w, VertexId x, VertexId y);

/// Every vertex that resolves {x, y}, ascending. Two BFS runs, one from each
/// endpoint, then a vectorized inequality mask.
std::vector<VertexId> resolver_set(const LabeledGraph& g, VertexId x, VertexId y);

/// Same, from already computed distance arrays of x and y.
std::vector<VertexId> resolver_set(std::span<const Dist> from_x, std::span<const Dist> from_y);

struct UnresolvedPair {
  VertexId x = 0;
  VertexId y = 0;
};

struct ResolvingCheck {
  std::optional<UnresolvedPair> witness;
  bool ok() const noexcept { return !witness.has_value(); }
};

/// Decides whether all distance vectors to `set` are pairwise distinct.
///
/// Runs one BFS per member and refines a lexicographic ordering of the
/// vertices column by column, so only a single distance column is live at a
/// time and the work stays near |set| * |V| log |V|. Any group of equal rows
/// left at the end yields the witness (the two smallest ids in it).
ResolvingCheck is_resolving_set(const LabeledGraph& g, std::span<const VertexId> set);

inline constexpr std::size_t kTinyVertexLimit = 16;

/// Smallest resolving set of size <= max_k by increasing-size enumeration,
/// lexicographically first among equals; nullopt when none exists.
/// Throws CapacityError above kTinyVertexLimit vertices.
std::optional<std::vector<VertexId>> metric_dimension_tiny(const LabeledGraph& g, int max_k);

}  // namespace mdred
