#pragma once

#include <iosfwd>

#include "mdred/graph.hpp"

namespace mdred {

// Line-oriented graph format:
//   g <vertexCount> <edgeCount>
//   e <u> <w>          (0-based, u < w, one line per edge)
// Companion label file: one "<id>\t<label>" line per vertex.

void write_graph(std::ostream& out, const LabeledGraph& g);
void write_labels(std::ostream& out, const LabeledGraph& g);

/// Parses a graph and, when `labels` is non-null, its label file. Without a
/// label file every vertex v is named pv[anon,v+1]. Throws ParseError.
LabeledGraph read_graph(std::istream& graph, std::istream* labels = nullptr);

}  // namespace mdred
