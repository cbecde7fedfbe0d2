#include "mdred/resolving.hpp"

#include <algorithm>
#include <numeric>

#include "mdred/error.hpp"
#include "mdred/parallel.hpp"
#include "mdred/simd.hpp"

namespace mdred {

namespace {

void require_vertex(const LabeledGraph& g, VertexId v) {
  if (!g.contains(v)) throw ArgumentError("vertex id " + std::to_string(v) + " out of range");
}

void require_distinct(VertexId x, VertexId y) {
  if (x == y) throw ArgumentError("a vertex pair needs two distinct vertices");
}

}  // namespace

bool resolves(const LabeledGraph& g, VertexId w, VertexId x, VertexId y) {
  require_vertex(g, w);
  require_vertex(g, x);
  require_vertex(g, y);
  require_distinct(x, y);
  const auto d = bfs_distances(g, w);
  return d.dist[x] != d.dist[y];
}

std::vector<VertexId> resolver_set(std::span<const Dist> from_x, std::span<const Dist> from_y) {
  std::vector<std::uint8_t> mask(from_x.size());
  const std::size_t count = simd::not_equal_mask(from_x, from_y, mask);
  std::vector<VertexId> out;
  out.reserve(count);
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (mask[v]) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

std::vector<VertexId> resolver_set(const LabeledGraph& g, VertexId x, VertexId y) {
  require_vertex(g, x);
  require_vertex(g, y);
  require_distinct(x, y);
  const auto dx = bfs_distances(g, x);
  const auto dy = bfs_distances(g, y);
  return resolver_set(dx.dist, dy.dist);
}

ResolvingCheck is_resolving_set(const LabeledGraph& g, std::span<const VertexId> set) {
  const std::size_t n = g.vertex_count();
  for (VertexId v : set) require_vertex(g, v);
  if (n < 2) return {};
  if (set.empty()) return {UnresolvedPair{0, 1}};

  std::vector<VertexId> members(set.begin(), set.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  // groups are [bounds[k], bounds[k+1]) of rows equal on every column so far
  std::vector<std::size_t> bounds{0, n};
  std::vector<std::size_t> next_bounds;

  auto refine = [&](std::span<const Dist> col) {
    next_bounds.clear();
    next_bounds.push_back(0);
    for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
      const std::size_t lo = bounds[k];
      const std::size_t hi = bounds[k + 1];
      if (hi - lo > 1) {
        std::sort(order.begin() + lo, order.begin() + hi, [&](VertexId a, VertexId b) {
          return col[a] != col[b] ? col[a] < col[b] : a < b;
        });
        for (std::size_t t = lo + 1; t < hi; ++t) {
          if (col[order[t]] != col[order[t - 1]]) next_bounds.push_back(t);
        }
      }
      next_bounds.push_back(hi);
    }
    bounds.swap(next_bounds);
  };

  const std::size_t batch = std::max<std::size_t>(1, worker_count());
  std::vector<std::vector<Dist>> columns(batch, std::vector<Dist>(n));
  for (std::size_t start = 0; start < members.size() && bounds.size() - 1 < n; start += batch) {
    const std::size_t width = std::min(batch, members.size() - start);
    parallel_for(width, [&](std::size_t k) {
      std::vector<VertexId> queue;
      bfs_fill(g, members[start + k], columns[k], queue);
    });
    for (std::size_t k = 0; k < width && bounds.size() - 1 < n; ++k) refine(columns[k]);
  }

  for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
    if (bounds[k + 1] - bounds[k] > 1) {
      // rows inside a group are id-ascending after the final sort
      auto lo = order.begin() + static_cast<std::ptrdiff_t>(bounds[k]);
      auto hi = order.begin() + static_cast<std::ptrdiff_t>(bounds[k + 1]);
      std::sort(lo, hi);
      return {UnresolvedPair{*lo, *(lo + 1)}};
    }
  }
  return {};
}

std::optional<std::vector<VertexId>> metric_dimension_tiny(const LabeledGraph& g, int max_k) {
  const std::size_t n = g.vertex_count();
  if (n > kTinyVertexLimit) {
    throw CapacityError("metric_dimension_tiny accepts at most " +
                        std::to_string(kTinyVertexLimit) + " vertices, got " + std::to_string(n));
  }
  std::vector<std::vector<Dist>> d(n);
  for (std::size_t v = 0; v < n; ++v) d[v] = bfs_distances(g, static_cast<VertexId>(v)).dist;

  auto resolving = [&](const std::vector<VertexId>& s) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        const bool hit = std::any_of(s.begin(), s.end(), [&](VertexId w) { return d[w][x] != d[w][y]; });
        if (!hit) return false;
      }
    }
    return true;
  };

  const int top = std::min<int>(max_k, static_cast<int>(n));
  for (int k = 0; k <= top; ++k) {
    std::vector<VertexId> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      if (resolving(pick)) return pick;
      // next k-combination in lexicographic order
      int pos = k - 1;
      while (pos >= 0 && pick[pos] == static_cast<VertexId>(n) - k + pos) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int t = pos + 1; t < k; ++t) pick[t] = pick[t - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace mdred
