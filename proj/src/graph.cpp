#include "mdred/graph.hpp"

#include <algorithm>
#include <charconv>

#include "mdred/error.hpp"
#include "mdred/parallel.hpp"

namespace mdred {

namespace {

std::string_view role_prefix(Role r) {
  switch (r) {
    case Role::S: return "s";
    case Role::A: return "a";
    case Role::B: return "b";
    case Role::C: return "c";
    case Role::U: return "u";
    case Role::V: return "v";
    case Role::P: return "p";
    case Role::Q: return "q";
    case Role::Pi: return "pi";
    case Role::PathInternal: return "pv";
    case Role::Twin1: return "twin1";
    case Role::Twin2: return "twin2";
    case Role::Connector: return "conn";
  }
  return "?";
}

int parse_int(std::string_view s, std::string_view whole) {
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc{} || ptr != end) {
    throw ArgumentError("malformed vertex label '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

std::string VertexLabel::to_string() const {
  std::string out(role_prefix(role));
  out += '[';
  switch (role) {
    case Role::A:
    case Role::B:
    case Role::C:
      out += std::to_string(first);
      break;
    case Role::PathInternal:
      out += key;
      out += ',';
      out += std::to_string(first);
      break;
    case Role::Twin1:
    case Role::Twin2:
    case Role::Connector:
      out += key;
      break;
    default:
      out += std::to_string(first);
      out += ',';
      out += std::to_string(second);
  }
  out += ']';
  return out;
}

VertexLabel VertexLabel::parse(std::string_view text) {
  const auto open = text.find('[');
  if (open == std::string_view::npos || text.size() < open + 2 || text.back() != ']') {
    throw ArgumentError("malformed vertex label '" + std::string(text) + "'");
  }
  const std::string_view name = text.substr(0, open);
  const std::string_view body = text.substr(open + 1, text.size() - open - 2);

  auto two = [&](Role r) {
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) {
      throw ArgumentError("malformed vertex label '" + std::string(text) + "'");
    }
    return VertexLabel{r, parse_int(body.substr(0, comma), text),
                       parse_int(body.substr(comma + 1), text), {}};
  };
  auto one = [&](Role r) { return VertexLabel{r, parse_int(body, text), 0, {}}; };

  if (name == "s") return two(Role::S);
  if (name == "a") return one(Role::A);
  if (name == "b") return one(Role::B);
  if (name == "c") return one(Role::C);
  if (name == "u") return two(Role::U);
  if (name == "v") return two(Role::V);
  if (name == "p") return two(Role::P);
  if (name == "q") return two(Role::Q);
  if (name == "pi") return two(Role::Pi);
  if (name == "pv") {
    const auto comma = body.rfind(',');
    if (comma == std::string_view::npos || comma == 0) {
      throw ArgumentError("malformed vertex label '" + std::string(text) + "'");
    }
    return path_internal(std::string(body.substr(0, comma)),
                         parse_int(body.substr(comma + 1), text));
  }
  if (body.empty()) throw ArgumentError("malformed vertex label '" + std::string(text) + "'");
  if (name == "twin1") return twin1(std::string(body));
  if (name == "twin2") return twin2(std::string(body));
  if (name == "conn") return connector(std::string(body));
  throw ArgumentError("unknown vertex role in label '" + std::string(text) + "'");
}

VertexId PathRecord::at(int offset) const {
  if (offset < 0 || offset > length) {
    throw ArgumentError("offset " + std::to_string(offset) + " outside path " + id);
  }
  if (offset == 0) return from;
  if (offset == length) return to;
  return internals[offset - 1];
}

std::vector<VertexId> PathRecord::vertices() const {
  std::vector<VertexId> out;
  out.reserve(internals.size() + 2);
  out.push_back(from);
  out.insert(out.end(), internals.begin(), internals.end());
  out.push_back(to);
  return out;
}

// ---------------------------------------------------------------------------

bool LabeledGraph::has_edge(VertexId u, VertexId w) const {
  if (!contains(u) || !contains(w)) return false;
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), w);
}

std::optional<VertexId> LabeledGraph::find(const VertexLabel& label) const {
  return find(label.to_string());
}

std::optional<VertexId> LabeledGraph::find(std::string_view label) const {
  const auto it = by_label_.find(std::string(label));
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

VertexId LabeledGraph::id(const VertexLabel& label) const {
  const auto v = find(label);
  if (!v) throw ArgumentError("no vertex labeled " + label.to_string());
  return *v;
}

const PathRecord& LabeledGraph::path(std::string_view id) const {
  const auto it = by_path_.find(std::string(id));
  if (it == by_path_.end()) throw ArgumentError("no path " + std::string(id));
  return paths_[it->second];
}

bool LabeledGraph::has_path(std::string_view id) const {
  return by_path_.contains(std::string(id));
}

bool LabeledGraph::same_labeled_graph(const LabeledGraph& other) const {
  return labels_ == other.labels_ && edges_ == other.edges_;
}

// ---------------------------------------------------------------------------

GraphBuilder::GraphBuilder(const LabeledGraph& g)
    : labels_(g.labels_), by_label_(g.by_label_), paths_(g.paths_), by_path_(g.by_path_) {
  adjacency_.resize(g.vertex_count());
  for (const Edge& e : g.edges()) {
    adjacency_[e.u].push_back(e.w);
    adjacency_[e.w].push_back(e.u);
    edge_set_.insert(key(e.u, e.w));
  }
}

std::uint64_t GraphBuilder::key(VertexId u, VertexId w) noexcept {
  if (u > w) std::swap(u, w);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(w);
}

void GraphBuilder::check_vertex(VertexId v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= labels_.size()) {
    throw ConstructionError("vertex id " + std::to_string(v) + " does not exist");
  }
}

VertexId GraphBuilder::add_vertex(VertexLabel label) {
  auto text = label.to_string();
  const auto id = static_cast<VertexId>(labels_.size());
  if (!by_label_.emplace(std::move(text), id).second) {
    throw ConstructionError("duplicate vertex label " + label.to_string());
  }
  labels_.push_back(std::move(label));
  adjacency_.emplace_back();
  return id;
}

bool GraphBuilder::has_edge(VertexId u, VertexId w) const { return edge_set_.contains(key(u, w)); }

void GraphBuilder::add_edge(VertexId u, VertexId w) {
  check_vertex(u);
  check_vertex(w);
  if (u == w) throw ConstructionError("self loop at " + labels_[u].to_string());
  if (!edge_set_.insert(key(u, w)).second) {
    throw ConstructionError("duplicate edge " + labels_[u].to_string() + " - " +
                            labels_[w].to_string());
  }
  adjacency_[u].push_back(w);
  adjacency_[w].push_back(u);
}

void GraphBuilder::remove_edge(VertexId u, VertexId w) {
  check_vertex(u);
  check_vertex(w);
  if (edge_set_.erase(key(u, w)) == 0) {
    throw ConstructionError("no edge " + labels_[u].to_string() + " - " + labels_[w].to_string());
  }
  std::erase(adjacency_[u], w);
  std::erase(adjacency_[w], u);

  auto uses_edge = [&](const PathRecord& p) {
    const auto vs = p.vertices();
    for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
      if (key(vs[k], vs[k + 1]) == key(u, w)) return true;
    }
    return false;
  };
  std::erase_if(paths_, uses_edge);
  by_path_.clear();
  for (std::size_t k = 0; k < paths_.size(); ++k) by_path_.emplace(paths_[k].id, k);
}

const PathRecord& GraphBuilder::add_path(VertexId u, VertexId w, int len, std::string path_id) {
  check_vertex(u);
  check_vertex(w);
  if (len < 1) throw ConstructionError("path " + path_id + " has nonpositive length");
  if (by_path_.contains(path_id)) throw ConstructionError("duplicate path id " + path_id);

  PathRecord rec{path_id, u, w, len, {}};
  rec.internals.reserve(static_cast<std::size_t>(len - 1));
  VertexId prev = u;
  for (int offset = 1; offset < len; ++offset) {
    const VertexId x = add_vertex(VertexLabel::path_internal(path_id, offset));
    add_edge(prev, x);
    rec.internals.push_back(x);
    prev = x;
  }
  add_edge(prev, w);

  by_path_.emplace(path_id, paths_.size());
  paths_.push_back(std::move(rec));
  return paths_.back();
}

VertexId GraphBuilder::id(const VertexLabel& label) const {
  const auto it = by_label_.find(label.to_string());
  if (it == by_label_.end()) throw ConstructionError("no vertex labeled " + label.to_string());
  return it->second;
}

const PathRecord& GraphBuilder::path(std::string_view id) const {
  const auto it = by_path_.find(std::string(id));
  if (it == by_path_.end()) throw ConstructionError("no path " + std::string(id));
  return paths_[it->second];
}

LabeledGraph GraphBuilder::finish() && {
  LabeledGraph g;
  const std::size_t n = labels_.size();

  g.edges_.reserve(edge_set_.size());
  for (VertexId u = 0; static_cast<std::size_t>(u) < n; ++u) {
    std::sort(adjacency_[u].begin(), adjacency_[u].end());
    for (VertexId w : adjacency_[u]) {
      if (u < w) g.edges_.push_back({u, w});
    }
  }

  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + adjacency_[v].size();
  g.adjacency_.resize(g.offsets_[n]);
  g.edge_slots_.resize(g.offsets_[n]);
  for (std::size_t v = 0; v < n; ++v) {
    std::copy(adjacency_[v].begin(), adjacency_[v].end(), g.adjacency_.begin() + g.offsets_[v]);
  }
  auto slot_of = [&g](VertexId from, VertexId to) {
    const auto nb = g.neighbors(from);
    return g.offsets_[from] + static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), to) - nb.begin());
  };
  for (std::size_t e = 0; e < g.edges_.size(); ++e) {
    const auto [u, w] = g.edges_[e];
    g.edge_slots_[slot_of(u, w)] = static_cast<std::int32_t>(e);
    g.edge_slots_[slot_of(w, u)] = static_cast<std::int32_t>(e);
  }

  for (const PathRecord& p : paths_) {
    if (static_cast<int>(p.internals.size()) != p.length - 1) {
      throw ConstructionError("path " + p.id + " registry length mismatch");
    }
  }

  g.labels_ = std::move(labels_);
  g.by_label_ = std::move(by_label_);
  g.paths_ = std::move(paths_);
  g.by_path_ = std::move(by_path_);
  return g;
}

// ---------------------------------------------------------------------------

void bfs_fill(const LabeledGraph& g, VertexId src, std::span<Dist> out,
              std::vector<VertexId>& queue) {
  if (!g.contains(src)) throw ArgumentError("bfs source out of range");
  std::fill(out.begin(), out.end(), kUnreachable);
  queue.clear();
  queue.reserve(g.vertex_count());
  out[src] = 0;
  queue.push_back(src);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    const Dist next = out[v] + 1;
    for (VertexId w : g.neighbors(v)) {
      if (out[w] == kUnreachable) {
        out[w] = next;
        queue.push_back(w);
      }
    }
  }
}

DistanceVector bfs_distances(const LabeledGraph& g, VertexId src) {
  DistanceVector dv{src, std::vector<Dist>(g.vertex_count())};
  std::vector<VertexId> queue;
  bfs_fill(g, src, dv.dist, queue);
  return dv;
}

std::vector<DistanceVector> bfs_many(const LabeledGraph& g, std::span<const VertexId> sources) {
  std::vector<DistanceVector> out(sources.size());
  parallel_for(sources.size(), [&](std::size_t k) { out[k] = bfs_distances(g, sources[k]); });
  return out;
}

}  // namespace mdred
