#include "mdred/mrs.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "mdred/error.hpp"

namespace mdred {

std::string selector_path_id(int i, int j, char hub, int r) {
  return "P(s[" + std::to_string(i) + "," + std::to_string(j) + "]," + hub + "[" +
         std::to_string(r) + "])";
}

std::string pair_path_id(char side, int r, int i, char hub) {
  return std::string("P(") + side + "[" + std::to_string(r) + "," + std::to_string(i) + "]," + hub +
         "[" + std::to_string(r) + "])";
}

namespace {

// Hub-path lengths of the construction, keyed by hub letter.
int selector_length(int M, char hub, int coord) {
  switch (hub) {
    case 'a': return M / 2 + 10 * coord;
    case 'b': return M / 2 + 5 * coord + 1;
    default: return M / 2 - 10 * coord;
  }
}

int pair_length(int M, char side, char hub, int p) {
  switch (hub) {
    case 'a': return M / 2 - 10 * p;
    case 'b': return M / 2 - 5 * p - (side == 'u' ? 1 : 2);
    default: return M / 2 + 10 * p;
  }
}

constexpr std::array<char, 3> kHubs{'a', 'b', 'c'};

VertexId hub_of(const MrsLayout& l, char hub, int r) {
  return hub == 'a' ? l.hub_a(r) : (hub == 'b' ? l.hub_b(r) : l.hub_c(r));
}

}  // namespace

MrsLayout populate_mrs(GraphBuilder& b, const ThreeDMInstance& inst) {
  inst.validate();
  MrsLayout l;
  l.n = inst.n;
  l.m = inst.m();
  l.M = 40 * (inst.n + 1);

  l.classes.assign(l.n, std::vector<VertexId>(l.m));
  for (int i = 1; i <= l.n; ++i) {
    for (int j = 1; j <= l.m; ++j) l.classes[i - 1][j - 1] = b.add_vertex(VertexLabel::s(i, j));
  }
  for (int r = 1; r <= 3; ++r) {
    l.hubs[3 * (r - 1)] = b.add_vertex(VertexLabel::a(r));
    l.hubs[3 * (r - 1) + 1] = b.add_vertex(VertexLabel::b(r));
    l.hubs[3 * (r - 1) + 2] = b.add_vertex(VertexLabel::c(r));
  }
  for (int r = 1; r <= 3; ++r) {
    for (int p = 1; p <= l.n; ++p) {
      const VertexId u = b.add_vertex(VertexLabel::u(r, p));
      const VertexId v = b.add_vertex(VertexLabel::v(r, p));
      l.pairs.push_back({r, p, u, v});
    }
  }

  for (int i = 1; i <= l.n; ++i) {
    for (int j = 1; j <= l.m; ++j) {
      for (int r = 1; r <= 3; ++r) {
        const int coord = inst.tuple(j).coordinate(r);
        for (char hub : kHubs) {
          b.add_path(l.selector(i, j), hub_of(l, hub, r), selector_length(l.M, hub, coord),
                     selector_path_id(i, j, hub, r));
        }
      }
    }
  }
  for (const PairIds& pr : l.pairs) {
    for (char hub : kHubs) {
      b.add_path(pr.u, hub_of(l, hub, pr.r), pair_length(l.M, 'u', hub, pr.index),
                 pair_path_id('u', pr.r, pr.index, hub));
      b.add_path(pr.v, hub_of(l, hub, pr.r), pair_length(l.M, 'v', hub, pr.index),
                 pair_path_id('v', pr.r, pr.index, hub));
    }
  }
  return l;
}

Report verify_distance_identities(const LabeledGraph& g, const MrsLayout& l,
                                  const ThreeDMInstance& inst) {
  Report rep{"distance-identities", 0, {}};
  const auto from_hub = bfs_many(g, l.hubs);
  auto dist = [&](char hub, int r, VertexId v) {
    const std::size_t slot = 3 * (r - 1) + (hub == 'a' ? 0 : hub == 'b' ? 1 : 2);
    return from_hub[slot].dist[v];
  };
  for (int i = 1; i <= l.n; ++i) {
    for (int j = 1; j <= l.m; ++j) {
      for (int r = 1; r <= 3; ++r) {
        const int coord = inst.tuple(j).coordinate(r);
        for (char hub : kHubs) {
          const Dist got = dist(hub, r, l.selector(i, j));
          const int want = selector_length(l.M, hub, coord);
          rep.expect(got == want, "dist(" + VertexLabel::s(i, j).to_string() + "," + hub + "[" +
                                      std::to_string(r) + "]) = " + std::to_string(got) +
                                      ", expected " + std::to_string(want));
        }
      }
    }
  }
  for (const PairIds& pr : l.pairs) {
    for (char side : {'u', 'v'}) {
      const VertexId x = side == 'u' ? pr.u : pr.v;
      for (char hub : kHubs) {
        const Dist got = dist(hub, pr.r, x);
        const int want = pair_length(l.M, side, hub, pr.index);
        rep.expect(got == want, "dist(" + g.label(x).to_string() + "," + hub + "[" +
                                    std::to_string(pr.r) + "]) = " + std::to_string(got) +
                                    ", expected " + std::to_string(want));
      }
    }
  }
  return rep;
}

MrsInstance build_mrs(const ThreeDMInstance& inst) {
  GraphBuilder b;
  MrsLayout layout = populate_mrs(b, inst);
  MrsInstance mrs{std::move(b).finish(), std::move(layout)};
  const Report rep = verify_distance_identities(mrs.graph, mrs.layout, inst);
  if (!rep.ok()) throw ConstructionError("distance identity violated: " + rep.violations.front());
  return mrs;
}

Report verify_lemma_resolve(const MrsInstance& mrs, const ThreeDMInstance& inst) {
  const MrsLayout& l = mrs.layout;
  Report rep{"lemma-resolve", 0, {}};
  std::vector<VertexId> sources;
  for (const PairIds& pr : l.pairs) {
    sources.push_back(pr.u);
    sources.push_back(pr.v);
  }
  const auto d = bfs_many(mrs.graph, sources);
  for (std::size_t k = 0; k < l.pairs.size(); ++k) {
    const PairIds& pr = l.pairs[k];
    const auto& du = d[2 * k].dist;
    const auto& dv = d[2 * k + 1].dist;
    for (int i = 1; i <= l.n; ++i) {
      for (int j = 1; j <= l.m; ++j) {
        const VertexId s = l.selector(i, j);
        const bool resolved = du[s] != dv[s];
        const bool member = inst.contains(j, pr.r, pr.index);
        rep.expect(resolved == member,
                   VertexLabel::s(i, j).to_string() + (resolved ? " resolves " : " misses ") +
                       "{" + mrs.graph.label(pr.u).to_string() + "," +
                       mrs.graph.label(pr.v).to_string() + "} but (" + std::to_string(pr.r) + "," +
                       std::to_string(pr.index) + (member ? ") is in A_" : ") is not in A_") +
                       std::to_string(j));
      }
    }
  }
  return rep;
}

Verdict check_mrs_solution(const MrsInstance& mrs, std::span<const VertexId> set) {
  const MrsLayout& l = mrs.layout;
  std::vector<VertexId> s(set.begin(), set.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (VertexId v : s) {
    if (!mrs.graph.contains(v)) return Verdict::fail("vertex id " + std::to_string(v) + " out of range");
  }

  for (int i = 1; i <= l.n; ++i) {
    const auto& cls = l.classes[i - 1];
    const auto hits = std::count_if(s.begin(), s.end(), [&](VertexId v) {
      return std::find(cls.begin(), cls.end(), v) != cls.end();
    });
    if (hits == 0) return Verdict::fail("class X_" + std::to_string(i) + " has no chosen vertex");
    if (hits > 1) {
      return Verdict::fail("cardinality: |S n X_" + std::to_string(i) + "| = " + std::to_string(hits));
    }
  }
  if (static_cast<int>(s.size()) != l.n) {
    return Verdict::fail("cardinality: |S| = " + std::to_string(s.size()) + ", expected " +
                         std::to_string(l.n));
  }

  const auto d = bfs_many(mrs.graph, s);
  for (const PairIds& pr : l.pairs) {
    const bool hit = std::any_of(d.begin(), d.end(), [&](const DistanceVector& dv) {
      return dv.dist[pr.u] != dv.dist[pr.v];
    });
    if (!hit) {
      return Verdict::fail("pair {" + mrs.graph.label(pr.u).to_string() + "," +
                           mrs.graph.label(pr.v).to_string() + "} unresolved");
    }
  }
  return Verdict::pass();
}

std::optional<std::vector<int>> solve_mrs(const MrsInstance& mrs) {
  const MrsLayout& l = mrs.layout;
  long long selections = 1;
  for (int i = 0; i < l.n; ++i) {
    selections *= l.m;
    if (selections > kMrsSelectionLimit) {
      throw CapacityError("solve_mrs: m^n exceeds " + std::to_string(kMrsSelectionLimit));
    }
  }

  const std::size_t words = (l.pairs.size() + 63) / 64;
  using Mask = std::vector<std::uint64_t>;
  std::vector<VertexId> sources;
  for (const PairIds& pr : l.pairs) {
    sources.push_back(pr.u);
    sources.push_back(pr.v);
  }
  const auto d = bfs_many(mrs.graph, sources);

  // masks[i-1][j-1]: the pairs s_i^j resolves
  std::vector<std::vector<Mask>> masks(l.n, std::vector<Mask>(l.m, Mask(words, 0)));
  for (int i = 1; i <= l.n; ++i) {
    for (int j = 1; j <= l.m; ++j) {
      const VertexId s = l.selector(i, j);
      for (std::size_t k = 0; k < l.pairs.size(); ++k) {
        if (d[2 * k].dist[s] != d[2 * k + 1].dist[s]) masks[i - 1][j - 1][k / 64] |= 1ull << (k % 64);
      }
    }
  }
  Mask full(words, ~0ull);
  if (l.pairs.size() % 64 != 0) full.back() = (1ull << (l.pairs.size() % 64)) - 1;

  std::vector<int> pick(l.n, 0);
  std::vector<Mask> acc(l.n + 1, Mask(words, 0));
  auto search = [&](auto&& self, int i) -> bool {
    if (i == l.n) return acc[i] == full;
    for (int j = 0; j < l.m; ++j) {
      for (std::size_t w = 0; w < words; ++w) acc[i + 1][w] = acc[i][w] | masks[i][j][w];
      pick[i] = j + 1;
      if (self(self, i + 1)) return true;
    }
    return false;
  };
  if (search(search, 0)) return pick;
  return std::nullopt;
}

std::vector<VertexId> selection_vertices(const MrsLayout& layout, const std::vector<int>& selection) {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < selection.size(); ++i) {
    out.push_back(layout.selector(static_cast<int>(i) + 1, selection[i]));
  }
  return out;
}

FvsResult verify_fvs(const LabeledGraph& g, std::span<const VertexId> removed) {
  const std::size_t n = g.vertex_count();
  std::vector<char> gone(n, 0);
  for (VertexId v : removed) gone.at(static_cast<std::size_t>(v)) = 1;

  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };

  FvsResult res;
  std::size_t kept = 0;
  std::size_t merges = 0;
  for (std::size_t v = 0; v < n; ++v) kept += !gone[v];
  for (const Edge& e : g.edges()) {
    if (gone[e.u] || gone[e.w]) continue;
    const VertexId a = root(e.u);
    const VertexId b = root(e.w);
    if (a == b) {
      if (res.acyclic) res.cycle_edge = e;
      res.acyclic = false;
      continue;
    }
    parent[a] = b;
    ++merges;
  }
  res.components = kept - merges;
  return res;
}

FvsResult verify_fvs(const MrsInstance& mrs) { return verify_fvs(mrs.graph, mrs.layout.hubs); }

void write_mrs_meta(std::ostream& out, const MrsLayout& l) {
  out << "param n " << l.n << '\n';
  out << "param M " << l.M << '\n';
  for (int r = 1; r <= 3; ++r) {
    out << "hub a[" << r << "] " << l.hub_a(r) << '\n';
    out << "hub b[" << r << "] " << l.hub_b(r) << '\n';
    out << "hub c[" << r << "] " << l.hub_c(r) << '\n';
  }
  for (int i = 1; i <= l.n; ++i) {
    out << "xset " << i;
    for (VertexId v : l.classes[i - 1]) out << ' ' << v;
    out << '\n';
  }
  for (const PairIds& pr : l.pairs) {
    out << "pair " << pr.r << ' ' << pr.index << ' ' << pr.u << ' ' << pr.v << '\n';
  }
}

}  // namespace mdred
