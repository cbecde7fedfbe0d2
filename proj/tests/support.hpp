#pragma once

// Small graphs and slow reference implementations shared by the tests. Every
// oracle here is written from the definitions, independent of the library's
// fast paths.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "mdred/graph.hpp"
#include "mdred/tdm.hpp"

namespace mdred::testing {

inline LabeledGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  GraphBuilder b;
  for (int v = 0; v < n; ++v) b.add_vertex(VertexLabel::path_internal("t", v));
  for (auto [u, w] : edges) b.add_edge(u, w);
  return std::move(b).finish();
}

inline LabeledGraph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return make_graph(n, e);
}

inline LabeledGraph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return make_graph(n, e);
}

inline LabeledGraph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) e.emplace_back(u, w);
  }
  return make_graph(n, e);
}

inline LabeledGraph star_graph(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return make_graph(leaves + 1, e);
}

// Erdos-Renyi style; the engine is fully specified so results are portable.
inline LabeledGraph random_graph(int n, double p, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) {
      if (static_cast<double>(rng() >> 11) / 9007199254740992.0 < p) e.emplace_back(u, w);
    }
  }
  return make_graph(n, e);
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// All-pairs distances, Floyd-Warshall.
inline std::vector<std::vector<Dist>> all_pairs(const LabeledGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Dist>> d(n, std::vector<Dist>(n, kUnreachable));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (const Edge& e : g.edges()) d[e.u][e.w] = d[e.w][e.u] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i][k] == kUnreachable) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (d[k][j] == kUnreachable) continue;
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  return d;
}

// Textbook BFS over an adjacency list rebuilt from the edge list.
inline std::vector<Dist> reference_bfs(const LabeledGraph& g, VertexId src) {
  std::vector<std::vector<VertexId>> adj(g.vertex_count());
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.w);
    adj[e.w].push_back(e.u);
  }
  std::vector<Dist> d(g.vertex_count(), kUnreachable);
  std::deque<VertexId> q{src};
  d[src] = 0;
  while (!q.empty()) {
    const VertexId x = q.front();
    q.pop_front();
    for (VertexId y : adj[x]) {
      if (d[y] == kUnreachable) {
        d[y] = d[x] + 1;
        q.push_back(y);
      }
    }
  }
  return d;
}

// Connected components by iterative DFS.
inline std::size_t count_components(const LabeledGraph& g, const std::vector<char>& skip) {
  std::vector<char> seen(skip);
  std::size_t count = 0;
  for (VertexId v = 0; static_cast<std::size_t>(v) < g.vertex_count(); ++v) {
    if (seen[v]) continue;
    ++count;
    std::vector<VertexId> stack{v};
    seen[v] = 1;
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return count;
}

// Every pair compared against every landmark.
inline bool naive_resolving(const std::vector<std::vector<Dist>>& d, const std::vector<VertexId>& set) {
  const std::size_t n = d.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      bool split = false;
      for (VertexId w : set) split = split || d[w][x] != d[w][y];
      if (!split) return false;
    }
  }
  return true;
}

// Minimum resolving set size over all 2^n subsets (n <= 12 or so).
inline int naive_metric_dimension(const LabeledGraph& g) {
  const auto d = all_pairs(g);
  const int n = static_cast<int>(g.vertex_count());
  int best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= best) continue;
    std::vector<VertexId> set;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1u) set.push_back(v);
    }
    if (naive_resolving(d, set)) best = size;
  }
  return n <= 1 ? 0 : best;
}

// Whether any n-subset of tuple indices covers the universe exactly.
inline bool enumerate_3dm(const ThreeDMInstance& inst) {
  const int m = inst.m();
  const int n = inst.n;
  std::vector<int> pick(n);
  auto covers = [&] {
    std::set<std::pair<int, int>> seen;
    for (int j : pick) {
      for (int r = 1; r <= 3; ++r) seen.insert({r, inst.tuple(j).coordinate(r)});
    }
    return static_cast<int>(seen.size()) == 3 * n;
  };
  // lexicographic n-combinations of 1..m
  for (int k = 0; k < n; ++k) pick[k] = k + 1;
  if (n > m) return false;
  while (true) {
    if (covers()) return true;
    int k = n - 1;
    while (k >= 0 && pick[k] == m - n + k + 1) --k;
    if (k < 0) return false;
    ++pick[k];
    for (int t = k + 1; t < n; ++t) pick[t] = pick[t - 1] + 1;
  }
}

}  // namespace mdred::testing
