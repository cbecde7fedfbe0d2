#include "mdred/md.hpp"

#include <ostream>

#include "mdred/error.hpp"
#include "mdred/simd.hpp"

namespace mdred {

namespace {

std::string idx(std::initializer_list<int> xs) {
  std::string out;
  for (int x : xs) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

std::string hub_name(char hub, int r) { return std::string(1, hub) + "[" + std::to_string(r) + "]"; }

std::string p_name(int i, int h) { return "p[" + idx({i, h}) + "]"; }

void require(bool cond, const std::string& clause) {
  if (!cond) throw ConstructionError("forced-gadget construction: " + clause);
}

class MdBuilder {
 public:
  explicit MdBuilder(const ThreeDMInstance& inst) : inst_(inst) {}

  MdInstance build() {
    layout_ = populate_mrs(b_, inst_);
    const int n = layout_.n;
    const int m = layout_.m;
    const int unit = n + 1;

    anchors_.resize(n);
    for (int i = 1; i <= n; ++i) {
      for (int h = 1; h <= 2; ++h) {
        ForcedSetAnchor& a = anchors_[i - 1][h - 1];
        a.p = b_.add_vertex(VertexLabel::p(i, h));
        a.q = b_.add_vertex(VertexLabel::q(i, h));
        a.pi = b_.add_vertex(VertexLabel::pi(i, h));
        b_.add_edge(a.p, a.pi);
        b_.add_edge(a.q, a.pi);
      }
    }

    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= m; ++j) {
        const VertexId s = layout_.selector(i, j);
        for (int h = 1; h <= 2; ++h) b_.add_path(s, anchor(i, h).p, 20 * unit, forced_path_id(i, j, h));
      }
    }

    // pi_i^h to the s-side neighbours of the selector's hub paths and of the
    // path towards the other p.
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= m; ++j) {
        for (int h = 1; h <= 2; ++h) {
          const VertexId pi = anchor(i, h).pi;
          for (int r = 1; r <= 3; ++r) {
            for (char hub : {'a', 'b', 'c'}) {
              const VertexId target = b_.path(selector_path_id(i, j, hub, r)).at(1);
              b_.add_path(pi, target, 20 * unit, pi_path_id(h, i, j, hub, r));
            }
          }
          const VertexId target = b_.path(forced_path_id(i, j, 3 - h)).at(1);
          b_.add_path(pi, target, 20 * unit, pi_cross_path_id(h, i, j));
        }
      }
    }

    for (int i = 1; i <= n; ++i) {
      for (int h = 1; h <= 2; ++h) {
        for (int r = 1; r <= 3; ++r) {
          b_.add_path(anchor(i, h).pi, layout_.hub_a(r), 10 * unit, pi_hub_path_id(i, h, 'a', r));
          b_.add_path(anchor(i, h).pi, layout_.hub_c(r), 10 * unit, pi_hub_path_id(i, h, 'c', r));
        }
      }
    }

    mids_.assign(n, std::vector<std::array<VertexId, 2>>(m));
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= m; ++j) {
        for (int h = 1; h <= 2; ++h) {
          const PathRecord& cross = b_.path(pi_cross_path_id(h, i, j));
          require(cross.length % 2 == 0, pi_cross_path_id(h, i, j) + " has odd length");
          mids_[i - 1][j - 1][h - 1] = cross.at(cross.length / 2);
        }
      }
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= m; ++j) {
        for (int h = 1; h <= 2; ++h) {
          const int len = b_.path(pi_cross_path_id(3 - h, i, j)).length / 2 +
                          b_.path(forced_path_id(i, j, h)).length - 1;
          b_.add_path(anchor(i, h).q, mids_[i - 1][j - 1][2 - h], len, l_path_id(i, j, h));
        }
      }
    }

    // forced vertex gadgets
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= m; ++j) {
        for (int h = 1; h <= 2; ++h) {
          for (int r = 1; r <= 3; ++r) {
            for (char hub : {'a', 'b', 'c'}) {
              attach("F[" + std::to_string(h) + "](" + idx({i, j}) + "," + hub_name(hub, r) + ")",
                     b_.path(pi_path_id(h, i, j, hub, r)).at(1));
            }
          }
          attach("F[" + std::to_string(h) + "](" + idx({i, j}) + "," + p_name(i, 3 - h) + ")",
                 b_.path(pi_cross_path_id(h, i, j)).at(1));
        }
      }
    }
    for (int i = 1; i <= n; ++i) {
      for (int h = 1; h <= 2; ++h) {
        for (int r = 1; r <= 3; ++r) {
          for (char hub : {'a', 'c'}) {
            const PathRecord& p = b_.path(pi_hub_path_id(i, h, hub, r));
            attach("F(pi[" + idx({i, h}) + "]," + hub_name(hub, r) + ")", p.at(p.length - 1));
          }
        }
      }
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= m; ++j) {
        for (int r = 1; r <= 3; ++r) {
          for (char hub : {'a', 'c'}) {
            const PathRecord& p = b_.path(selector_path_id(i, j, hub, r));
            attach("F(s[" + idx({i, j}) + "]," + hub_name(hub, r) + ")", p.at(p.length - 1));
          }
        }
      }
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= m; ++j) {
        for (int h = 1; h <= 2; ++h) attach("Fmid(" + idx({i, j, h}) + ")", mids_[i - 1][j - 1][h - 1]);
      }
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= m; ++j) {
        for (int h = 1; h <= 2; ++h) {
          for (int r = 1; r <= 3; ++r) {
            attach("Fecc(" + idx({i, j, h, r}) + ")",
                   b_.path(pi_path_id(h, i, j, 'a', r)).at(10 * unit + 1));
          }
        }
      }
    }
    for (int r = 1; r <= 3; ++r) {
      for (int i = 1; i <= n; ++i) {
        const PairIds& pr = layout_.pair(r, i);
        const PathRecord& to_a = b_.path(pair_path_id('u', r, i, 'a'));
        const PathRecord& to_c = b_.path(pair_path_id('u', r, i, 'c'));
        for (int which = 1; which <= 2; ++which) {
          const std::string id = "F" + std::to_string(which) + "(u[" + idx({r, i}) + "])";
          attach_new(id, {pr.u, pr.v, to_a.at(which), to_c.at(which)});
        }
      }
    }

    MdInstance md;
    md.k = md_budget(n, m);
    md.anchors = std::move(anchors_);
    md.gadgets = std::move(gadgets_);
    md.mids = std::move(mids_);
    md.graph = std::move(b_).finish();
    md.base = build_mrs(inst_);
    self_check(md);
    return md;
  }

 private:
  const ForcedSetAnchor& anchor(int i, int h) const { return anchors_[i - 1][h - 1]; }

  ForcedVertexGadget& triangle(const std::string& id, VertexId connector) {
    ForcedVertexGadget g;
    g.id = id;
    g.connector = connector;
    g.twin1 = b_.add_vertex(VertexLabel::twin1(id));
    g.twin2 = b_.add_vertex(VertexLabel::twin2(id));
    b_.add_edge(g.twin1, g.twin2);
    b_.add_edge(g.twin1, connector);
    b_.add_edge(g.twin2, connector);
    gadgets_.push_back(std::move(g));
    return gadgets_.back();
  }

  void attach(const std::string& id, VertexId connector) { triangle(id, connector); }

  void attach_new(const std::string& id, std::initializer_list<VertexId> targets) {
    const VertexId conn = b_.add_vertex(VertexLabel::connector(id));
    for (VertexId t : targets) b_.add_edge(conn, t);
    ForcedVertexGadget& g = triangle(id, conn);
    g.connector_is_new = true;
    g.attached_to.assign(targets.begin(), targets.end());
  }

  void self_check(const MdInstance& md) const {
    const LabeledGraph& g = md.graph;
    const int n = md.n();
    const int m = md.m();
    const int unit = n + 1;

    require(md.k == md_budget(n, m), "budget k != 34nm+19n");
    require(static_cast<long long>(md.gadgets.size()) == md_gadget_count(n, m),
            "gadget count " + std::to_string(md.gadgets.size()) + " != 34nm+18n");

    for (int i = 1; i <= n; ++i) {
      for (int h = 1; h <= 2; ++h) {
        const ForcedSetAnchor& a = md.anchor(i, h);
        require(g.has_edge(a.p, a.pi) && g.has_edge(a.q, a.pi),
                p_name(i, h) + "/q/pi adjacency of the forced set gadget");
        for (int j = 1; j <= m; ++j) {
          require(g.path(forced_path_id(i, j, h)).length == 20 * unit, forced_path_id(i, j, h) + " length");
          require(g.path(pi_cross_path_id(h, i, j)).length == 20 * unit, pi_cross_path_id(h, i, j) + " length");
          for (int r = 1; r <= 3; ++r) {
            for (char hub : {'a', 'b', 'c'}) {
              require(g.path(pi_path_id(h, i, j, hub, r)).length == 20 * unit,
                      pi_path_id(h, i, j, hub, r) + " length");
            }
          }
          const PathRecord& lp = g.path(l_path_id(i, j, h));
          require(lp.length == 30 * unit - 1, l_path_id(i, j, h) + " length");
          require(lp.from == a.q && lp.to == md.mid(i, j, 3 - h), l_path_id(i, j, h) + " endpoints");
        }
        for (int r = 1; r <= 3; ++r) {
          require(g.path(pi_hub_path_id(i, h, 'a', r)).length == 10 * unit, pi_hub_path_id(i, h, 'a', r) + " length");
          require(g.path(pi_hub_path_id(i, h, 'c', r)).length == 10 * unit, pi_hub_path_id(i, h, 'c', r) + " length");
        }
      }
    }

    for (const ForcedVertexGadget& fg : md.gadgets) {
      require(g.degree(fg.twin1) == 2 && g.degree(fg.twin2) == 2, fg.id + " twin degree != 2");
      require(g.has_edge(fg.twin1, fg.twin2) && g.has_edge(fg.twin1, fg.connector) &&
                  g.has_edge(fg.twin2, fg.connector),
              fg.id + " is not a triangle");
      if (fg.connector_is_new) {
        require(fg.attached_to.size() == 4 && g.degree(fg.connector) == 6, fg.id + " connector degree != 6");
      }
    }

    for (VertexId v = 0; static_cast<std::size_t>(v) < g.vertex_count(); ++v) {
      const VertexLabel& l = g.label(v);
      if (l.role == Role::PathInternal) {
        require(g.has_path(l.key), l.to_string() + " belongs to no registered path");
      }
    }

    const LabeledGraph& base = md.base.graph;
    require(base.vertex_count() <= g.vertex_count(), "G is larger than G'");
    for (VertexId v = 0; static_cast<std::size_t>(v) < base.vertex_count(); ++v) {
      require(base.label(v) == g.label(v), "vertex ids of G and G' diverge at " + base.label(v).to_string());
    }

    const auto from_a1 = bfs_distances(g, md.layout().hub_a(1));
    require(simd::max_finite(from_a1.dist).unreachable == 0, "G' is not connected");
  }

  const ThreeDMInstance& inst_;
  GraphBuilder b_;
  MrsLayout layout_;
  std::vector<std::array<ForcedSetAnchor, 2>> anchors_;
  std::vector<ForcedVertexGadget> gadgets_;
  std::vector<std::vector<std::array<VertexId, 2>>> mids_;
};

}  // namespace

std::string forced_path_id(int i, int j, int h) {
  return "P(s[" + idx({i, j}) + "]," + p_name(i, h) + ")";
}

std::string pi_path_id(int h, int i, int j, char hub, int r) {
  return "P[" + std::to_string(h) + "](" + idx({i, j}) + "," + hub_name(hub, r) + ")";
}

std::string pi_cross_path_id(int h, int i, int j) {
  return "P[" + std::to_string(h) + "](" + idx({i, j}) + "," + p_name(i, 3 - h) + ")";
}

std::string pi_hub_path_id(int i, int h, char hub, int r) {
  return "P(pi[" + idx({i, h}) + "]," + hub_name(hub, r) + ")";
}

std::string l_path_id(int i, int j, int h) {
  return "P(q[" + idx({i, h}) + "],mid(" + pi_cross_path_id(3 - h, i, j) + "))";
}

MdInstance build_md(const ThreeDMInstance& inst) {
  inst.validate();
  return MdBuilder(inst).build();
}

MdStats md_stats(const MdInstance& md) {
  return {md.graph.vertex_count(), md.graph.edge_count(), md.k, md.gadgets.size(),
          md.graph.paths().size()};
}

Report verify_distance_preservation(const LabeledGraph& g_prime, const MrsInstance& base) {
  const MrsLayout& l = base.layout;
  Report rep{"distance-preservation", 0, {}};
  std::vector<VertexId> sources;
  for (const PairIds& pr : l.pairs) {
    sources.push_back(pr.u);
    sources.push_back(pr.v);
  }
  const auto in_g = bfs_many(base.graph, sources);
  const auto in_gp = bfs_many(g_prime, sources);
  for (std::size_t k = 0; k < sources.size(); ++k) {
    for (int i = 1; i <= l.n; ++i) {
      for (int j = 1; j <= l.m; ++j) {
        const VertexId s = l.selector(i, j);
        const Dist a = in_g[k].dist[s];
        const Dist b = in_gp[k].dist[s];
        rep.expect(a == b, "dist(" + base.graph.label(s).to_string() + "," +
                               base.graph.label(sources[k]).to_string() + "): G=" + std::to_string(a) +
                               " G'=" + std::to_string(b));
      }
    }
  }
  return rep;
}

Report verify_distance_preservation(const MdInstance& md) {
  return verify_distance_preservation(md.graph, md.base);
}

void write_md_meta(std::ostream& out, const MdInstance& md) {
  write_mrs_meta(out, md.layout());
  out << "param m " << md.m() << '\n';
  out << "param k " << md.k << '\n';
  for (int i = 1; i <= md.n(); ++i) {
    for (int h = 1; h <= 2; ++h) {
      const ForcedSetAnchor& a = md.anchor(i, h);
      out << "anchor p " << i << ' ' << h << ' ' << a.p << '\n';
      out << "anchor q " << i << ' ' << h << ' ' << a.q << '\n';
      out << "anchor pi " << i << ' ' << h << ' ' << a.pi << '\n';
    }
  }
  for (int i = 1; i <= md.n(); ++i) {
    for (int j = 1; j <= md.m(); ++j) {
      for (int h = 1; h <= 2; ++h) out << "mid " << i << ' ' << j << ' ' << h << ' ' << md.mid(i, j, h) << '\n';
    }
  }
  for (const ForcedVertexGadget& g : md.gadgets) {
    out << "twin " << g.id << ' ' << g.twin1 << ' ' << g.twin2 << ' ' << g.connector << '\n';
  }
}

}  // namespace mdred
