#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdred/graph.hpp"

namespace mdred {

using Bag = std::vector<VertexId>;

enum class DecompositionFault {
  NoBags,
  UnknownVertex,
  RepeatedInBag,
  MissingVertex,
  NotContiguous,
  UncoveredEdge,
};

struct DecompositionViolation {
  DecompositionFault fault;
  VertexId u = -1;
  VertexId w = -1;  // second endpoint for UncoveredEdge
  std::size_t bag = 0;
  std::string message;
};

struct DecompositionCheck {
  std::optional<int> width;  // set iff valid
  std::optional<DecompositionViolation> violation;
  bool ok() const noexcept { return width.has_value(); }
};

/// Checks a path decomposition: every vertex appears, its bags form one
/// contiguous run, and every edge sits inside some bag. Width is the largest
/// bag minus one. Runs in O(total bag size + |E|).
DecompositionCheck validate_path_decomposition(const LabeledGraph& g, std::span<const Bag> bags);

}  // namespace mdred
