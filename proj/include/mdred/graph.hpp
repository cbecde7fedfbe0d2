#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mdred/types.hpp"

namespace mdred {

enum class Role : std::uint8_t {
  S,             // s[i,j]
  A,             // a[r]
  B,             // b[r]
  C,             // c[r]
  U,             // u[r,i]
  V,             // v[r,i]
  P,             // p[i,h]
  Q,             // q[i,h]
  Pi,            // pi[i,h]
  PathInternal,  // pv[<pathId>,<offset>]
  Twin1,         // twin1[<gadgetId>]
  Twin2,         // twin2[<gadgetId>]
  Connector,     // conn[<gadgetId>]
};

/// Semantic name of a vertex. `first`/`second` hold the bracketed indices in
/// the order they are written (s[i,j] -> i,j; u[r,i] -> r,i; p[i,h] -> i,h;
/// a[r] -> r). Path internals keep the offset in `first` and the path id in
/// `key`; gadget vertices keep the gadget id in `key`.
struct VertexLabel {
  Role role = Role::S;
  int first = 0;
  int second = 0;
  std::string key;

  static VertexLabel s(int i, int j) { return {Role::S, i, j, {}}; }
  static VertexLabel a(int r) { return {Role::A, r, 0, {}}; }
  static VertexLabel b(int r) { return {Role::B, r, 0, {}}; }
  static VertexLabel c(int r) { return {Role::C, r, 0, {}}; }
  static VertexLabel u(int r, int i) { return {Role::U, r, i, {}}; }
  static VertexLabel v(int r, int i) { return {Role::V, r, i, {}}; }
  static VertexLabel p(int i, int h) { return {Role::P, i, h, {}}; }
  static VertexLabel q(int i, int h) { return {Role::Q, i, h, {}}; }
  static VertexLabel pi(int i, int h) { return {Role::Pi, i, h, {}}; }
  static VertexLabel path_internal(std::string path_id, int offset) {
    return {Role::PathInternal, offset, 0, std::move(path_id)};
  }
  static VertexLabel twin1(std::string gadget_id) { return {Role::Twin1, 0, 0, std::move(gadget_id)}; }
  static VertexLabel twin2(std::string gadget_id) { return {Role::Twin2, 0, 0, std::move(gadget_id)}; }
  static VertexLabel connector(std::string gadget_id) {
    return {Role::Connector, 0, 0, std::move(gadget_id)};
  }

  std::string to_string() const;

  /// Inverse of to_string(). Throws ArgumentError on malformed input.
  static VertexLabel parse(std::string_view text);

  bool is_gadget_vertex() const noexcept {
    return role == Role::Twin1 || role == Role::Twin2 || role == Role::Connector;
  }

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

struct Edge {
  VertexId u;
  VertexId w;  // u < w
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A registered path between two vertices; internals[k-1] sits at offset k
/// from `from`.
struct PathRecord {
  std::string id;
  VertexId from = 0;
  VertexId to = 0;
  int length = 0;
  std::vector<VertexId> internals;

  /// Vertex at `offset` edges from `from` (0 -> from, length -> to).
  VertexId at(int offset) const;

  /// from, internals..., to
  std::vector<VertexId> vertices() const;
};

/// Immutable simple undirected graph with a label per vertex and a registry
/// of the named paths it was built from. Produced by GraphBuilder.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  /// Edge ids parallel to neighbors(v).
  std::span<const std::int32_t> incident_edges(VertexId v) const {
    return {edge_slots_.data() + offsets_[v], edge_slots_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(VertexId u, VertexId w) const;

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::int32_t id) const { return edges_[id]; }

  const VertexLabel& label(VertexId v) const { return labels_[v]; }
  std::optional<VertexId> find(const VertexLabel& label) const;
  std::optional<VertexId> find(std::string_view label) const;
  /// Like find(), but throws ArgumentError for unknown labels.
  VertexId id(const VertexLabel& label) const;

  const std::vector<PathRecord>& paths() const noexcept { return paths_; }
  const PathRecord& path(std::string_view id) const;
  bool has_path(std::string_view id) const;

  bool contains(VertexId v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < labels_.size();
  }

  /// Same labels on the same ids and the same edge set. The path registry is
  /// not compared (the text format does not carry it).
  bool same_labeled_graph(const LabeledGraph& other) const;

 private:
  friend class GraphBuilder;

  std::vector<VertexLabel> labels_;
  std::unordered_map<std::string, VertexId> by_label_;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> adjacency_;
  std::vector<std::int32_t> edge_slots_;
  std::vector<Edge> edges_;
  std::vector<PathRecord> paths_;
  std::unordered_map<std::string, std::size_t> by_path_;
};

/// Mutable construction front-end. All structural errors (duplicate labels,
/// loops, parallel edges, duplicate path ids) raise ConstructionError.
class GraphBuilder {
 public:
  GraphBuilder() = default;
  explicit GraphBuilder(const LabeledGraph& g);

  VertexId add_vertex(VertexLabel label);
  void add_edge(VertexId u, VertexId w);
  /// Removes an existing edge and unregisters every path that used it.
  void remove_edge(VertexId u, VertexId w);

  /// Links u and w with len edges through len-1 fresh PathInternal vertices.
  const PathRecord& add_path(VertexId u, VertexId w, int len, std::string path_id);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  bool has_edge(VertexId u, VertexId w) const;
  const VertexLabel& label(VertexId v) const { return labels_[v]; }
  VertexId id(const VertexLabel& label) const;
  const PathRecord& path(std::string_view id) const;

  LabeledGraph finish() &&;

 private:
  static std::uint64_t key(VertexId u, VertexId w) noexcept;
  void check_vertex(VertexId v) const;

  std::vector<VertexLabel> labels_;
  std::unordered_map<std::string, VertexId> by_label_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::unordered_set<std::uint64_t> edge_set_;
  std::vector<PathRecord> paths_;
  std::unordered_map<std::string, std::size_t> by_path_;
};

struct DistanceVector {
  VertexId source = 0;
  std::vector<Dist> dist;
};

DistanceVector bfs_distances(const LabeledGraph& g, VertexId src);

/// BFS into caller-owned storage; `queue` is scratch reused across calls.
void bfs_fill(const LabeledGraph& g, VertexId src, std::span<Dist> out,
              std::vector<VertexId>& queue);

/// One BFS per source, fanned out over worker threads.
std::vector<DistanceVector> bfs_many(const LabeledGraph& g, std::span<const VertexId> sources);

}  // namespace mdred
