#include "mdred/certify.hpp"

#include <algorithm>
#include <array>
#include <mutex>

#include "mdred/error.hpp"
#include "mdred/parallel.hpp"
#include "mdred/simd.hpp"

namespace mdred {

namespace {

std::vector<VertexId> pair_sources(const MrsLayout& l) {
  std::vector<VertexId> out;
  for (const PairIds& pr : l.pairs) {
    out.push_back(pr.u);
    out.push_back(pr.v);
  }
  return out;
}

std::string pair_text(const LabeledGraph& g, VertexId x, VertexId y) {
  return "{" + g.label(x).to_string() + "," + g.label(y).to_string() + "}";
}

std::string summarize(const Report& r) {
  std::string s = std::to_string(r.checks) + " checks, " + std::to_string(r.violations.size()) +
                  " violations";
  if (!r.ok()) s += "; first: " + r.violations.front();
  return s;
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

}  // namespace

PqClassification classify_pq(const MdInstance& md) {
  const LabeledGraph& g = md.graph;
  const std::size_t nv = g.vertex_count();
  PqClassification pq;
  pq.n = md.n();
  pq.category.assign(nv, PqCategory::Other);
  pq.x_class.assign(nv, 0);
  pq.resolved.assign(nv, 0);

  for (int i = 1; i <= md.n(); ++i) {
    for (VertexId s : md.layout().classes[i - 1]) {
      pq.category[s] = PqCategory::InX;
      pq.x_class[s] = i;
    }
  }
  for (const ForcedVertexGadget& fg : md.gadgets) {
    for (VertexId v : {fg.twin1, fg.twin2, fg.connector}) pq.category[v] = PqCategory::Gadget;
  }

  std::vector<VertexId> sources;
  for (int i = 1; i <= md.n(); ++i) {
    for (int h = 1; h <= 2; ++h) {
      sources.push_back(md.anchor(i, h).p);
      sources.push_back(md.anchor(i, h).q);
    }
  }
  auto d = bfs_many(g, sources);
  for (std::size_t k = 0; k < d.size(); k += 2) {
    pq.from_p.push_back(std::move(d[k].dist));
    pq.from_q.push_back(std::move(d[k + 1].dist));
    simd::accumulate_not_equal(pq.from_p.back(), pq.from_q.back(), pq.resolved);
  }
  return pq;
}

Report verify_forced_set_lemma(const MdInstance& md, const PqClassification& pq) {
  const LabeledGraph& g = md.graph;
  Report rep{"forced-set", 0, {}};
  for (VertexId v = 0; static_cast<std::size_t>(v) < g.vertex_count(); ++v) {
    const std::int32_t count = pq.resolved[v];
    switch (pq.category[v]) {
      case PqCategory::InX: {
        const int i = pq.x_class[v];
        rep.expect(count == 2 && pq.resolves(v, i, 1) && pq.resolves(v, i, 2),
                   g.label(v).to_string() + " should resolve exactly the pq pairs of class " +
                       std::to_string(i) + " (resolves " + std::to_string(count) + ")");
        break;
      }
      case PqCategory::Gadget:
        rep.expect(count == 0, "gadget vertex " + g.label(v).to_string() + " resolves " +
                                   std::to_string(count) + " pq pairs");
        break;
      case PqCategory::Other:
        rep.expect(count <= 1, g.label(v).to_string() + " resolves " + std::to_string(count) + " pq pairs");
        break;
    }
  }
  return rep;
}

Report verify_forced_set_lemma(const MdInstance& md) {
  return verify_forced_set_lemma(md, classify_pq(md));
}

Report verify_forced_vertex_lemma(const MdInstance& md) {
  const LabeledGraph& g = md.graph;
  const MrsLayout& l = md.layout();
  Report rep{"forced-vertex", 0, {}};
  const auto d = bfs_many(g, pair_sources(l));
  for (std::size_t k = 0; k < l.pairs.size(); ++k) {
    const PairIds& pr = l.pairs[k];
    const auto& du = d[2 * k].dist;
    const auto& dv = d[2 * k + 1].dist;
    for (const ForcedVertexGadget& fg : md.gadgets) {
      for (VertexId t : {fg.twin1, fg.twin2}) {
        rep.expect(du[t] == dv[t], g.label(t).to_string() + " resolves " + pair_text(g, pr.u, pr.v) +
                                       " (" + std::to_string(du[t]) + " vs " + std::to_string(dv[t]) + ")");
      }
    }
  }
  return rep;
}

Report verify_twin_exclusivity(const MdInstance& md) {
  const LabeledGraph& g = md.graph;
  const std::size_t nv = g.vertex_count();
  Report rep{"twin-exclusivity", 0, {}};
  std::vector<std::size_t> resolver_count(md.gadgets.size(), 0);
  std::vector<char> twins_resolve(md.gadgets.size(), 0);

  parallel_for(md.gadgets.size(), [&](std::size_t k) {
    const ForcedVertexGadget& fg = md.gadgets[k];
    std::vector<Dist> d1(nv);
    std::vector<Dist> d2(nv);
    std::vector<VertexId> queue;
    bfs_fill(g, fg.twin1, d1, queue);
    bfs_fill(g, fg.twin2, d2, queue);
    resolver_count[k] = simd::count_not_equal(d1, d2);
    twins_resolve[k] = d1[fg.twin1] != d2[fg.twin1] && d1[fg.twin2] != d2[fg.twin2];
  });

  for (std::size_t k = 0; k < md.gadgets.size(); ++k) {
    const ForcedVertexGadget& fg = md.gadgets[k];
    const bool exact = resolver_count[k] == 2 && twins_resolve[k];
    if (!exact) {
      std::string who;
      for (VertexId v : resolver_set(g, fg.twin1, fg.twin2)) {
        if (v != fg.twin1 && v != fg.twin2) {
          who = g.label(v).to_string();
          break;
        }
      }
      rep.expect(false, "twins of " + fg.id + " have " + std::to_string(resolver_count[k]) +
                            " resolvers, e.g. " + who);
    } else {
      rep.expect(true, {});
    }
  }
  return rep;
}

Report verify_pair_resolvers(const MdInstance& md, const ThreeDMInstance& inst) {
  const LabeledGraph& g = md.graph;
  const MrsLayout& l = md.layout();
  Report rep{"pair-resolvers", 0, {}};
  const auto d = bfs_many(g, pair_sources(l));
  std::vector<std::uint8_t> mask(g.vertex_count());
  for (std::size_t k = 0; k < l.pairs.size(); ++k) {
    const PairIds& pr = l.pairs[k];
    simd::not_equal_mask(d[2 * k].dist, d[2 * k + 1].dist, mask);
    for (int i = 1; i <= l.n; ++i) {
      for (int j = 1; j <= l.m; ++j) {
        const bool hit = mask[l.selector(i, j)] != 0;
        const bool want = inst.contains(j, pr.r, pr.index);
        rep.expect(hit == want, VertexLabel::s(i, j).to_string() + (hit ? " resolves " : " misses ") +
                                    pair_text(g, pr.u, pr.v));
      }
    }
    for (const ForcedVertexGadget& fg : md.gadgets) {
      for (VertexId t : {fg.twin1, fg.twin2}) {
        rep.expect(mask[t] == 0, g.label(t).to_string() + " resolves " + pair_text(g, pr.u, pr.v));
      }
    }
  }
  return rep;
}

std::string vertex_region(const LabeledGraph& g, VertexId v) {
  const VertexLabel& l = g.label(v);
  switch (l.role) {
    case Role::S: return "H";
    case Role::P: return "U";
    case Role::Q: return "L";
    case Role::Pi: return "S";
    case Role::A:
    case Role::B:
    case Role::C:
    case Role::U:
    case Role::V: return "R";
    case Role::Twin1:
    case Role::Twin2:
    case Role::Connector: return "F";
    case Role::PathInternal: break;
  }
  const std::string_view id = l.key;
  if (starts_with(id, "P(s[")) return id.find(",p[") != std::string_view::npos ? "U" : "H";
  if (starts_with(id, "P[")) return "Pi";
  if (starts_with(id, "P(pi[")) return "S";
  if (starts_with(id, "P(q[")) return "L";
  if (starts_with(id, "P(u[") || starts_with(id, "P(v[")) return "R";
  return "?";
}

std::string region_cell(const LabeledGraph& g, VertexId x, VertexId y) {
  static constexpr std::array<std::string_view, 7> kOrder{"U", "Pi", "S", "L", "H", "R", "F"};
  auto rank = [](const std::string& r) {
    const auto it = std::find(kOrder.begin(), kOrder.end(), r);
    return it - kOrder.begin();
  };
  std::string a = vertex_region(g, x);
  std::string b = vertex_region(g, y);
  if (rank(a) > rank(b)) std::swap(a, b);
  return a + " x " + b;
}

Certificate certify_yes(const MdInstance& md, const ThreeDMInstance& inst, const std::vector<int>& cover,
                        TwinChoice twins) {
  if (!is_cover(inst, cover)) throw ArgumentError("certify_yes: the given tuples are not a 3DM cover");

  Certificate cert;
  cert.kind = CertificateKind::Yes;
  cert.facts.push_back({"cover", true, std::to_string(cover.size()) + " tuples partition the universe"});

  for (const ForcedVertexGadget& fg : md.gadgets) {
    cert.resolving_set.push_back(twins == TwinChoice::First ? fg.twin1 : fg.twin2);
  }
  for (VertexId s : selection_vertices(md.layout(), cover)) cert.resolving_set.push_back(s);

  const bool size_ok = static_cast<long long>(cert.resolving_set.size()) == md.k;
  cert.facts.push_back({"size", size_ok,
                        "|S'| = " + std::to_string(cert.resolving_set.size()) + ", k = " + std::to_string(md.k)});

  const ResolvingCheck check = is_resolving_set(md.graph, cert.resolving_set);
  std::string detail = "all " + std::to_string(md.graph.vertex_count()) + " distance vectors distinct";
  if (!check.ok()) {
    cert.witness = check.witness;
    cert.witness_labels = pair_text(md.graph, check.witness->x, check.witness->y);
    cert.witness_cell = region_cell(md.graph, check.witness->x, check.witness->y);
    detail = "unresolved " + cert.witness_labels + " in cell " + cert.witness_cell;
  }
  cert.facts.push_back({"resolving", check.ok(), detail});
  cert.valid = size_ok && check.ok();
  return cert;
}

Certificate certify_no(const MdInstance& md, const ThreeDMInstance& inst) {
  Certificate cert;
  cert.kind = CertificateKind::No;
  const long long gadgets = static_cast<long long>(md.gadgets.size());

  const auto cover = solve_3dm(inst);
  std::string cover_text = "exhaustive search found no cover";
  if (cover) {
    cover_text = "cover exists:";
    for (int j : *cover) cover_text += " " + std::to_string(j);
  }
  cert.facts.push_back({"oracle-no", !cover.has_value(), cover_text});

  const Report a = verify_twin_exclusivity(md);
  cert.facts.push_back({"A:twin-exclusivity", a.ok(), summarize(a)});
  const Report b = verify_forced_set_lemma(md);
  cert.facts.push_back({"B:pq-classification", b.ok(), summarize(b)});
  const Report c = verify_pair_resolvers(md, inst);
  cert.facts.push_back({"C:pair-resolvers", c.ok(), summarize(c)});
  const bool budget = md.k - gadgets == md.n();
  cert.facts.push_back({"budget", budget,
                        "k - #gadgets = " + std::to_string(md.k) + " - " + std::to_string(gadgets) + " = " +
                            std::to_string(md.k - gadgets)});

  cert.valid = std::all_of(cert.facts.begin(), cert.facts.end(), [](const Fact& f) { return f.ok; });

  const std::string n = std::to_string(md.n());
  cert.reasoning = {
      "A: each of the " + std::to_string(gadgets) +
          " twin pairs is resolved only by its own twins, so a resolving set of size <= k holds >= " +
          std::to_string(gadgets) + " forced vertices",
      "budget: at most k - " + std::to_string(gadgets) + " = " + n + " further vertices remain",
      "B: forced vertices resolve no pq pair, X_i vertices resolve exactly the 2 pairs of class i, all other "
      "vertices at most 1; covering all " + std::to_string(2 * md.n()) + " pq pairs with " + n +
          " vertices forces exactly one vertex per X_i",
      "C: twins resolve no listed pair and the X-resolvers of each listed pair are the selectors whose tuple "
      "contains it, so the X choice is a one-per-class selection resolving every pair, i.e. a 3DM cover",
      "oracle: no cover exists, hence G' has no resolving set of size k",
  };
  return cert;
}

EquivalenceVerdict equivalence_check(const ThreeDMInstance& inst, const MdInstance& md) {
  EquivalenceVerdict out;
  out.cover = solve_3dm(inst);
  out.yes_instance = out.cover.has_value();
  if (out.yes_instance) {
    out.certificate = certify_yes(md, inst, *out.cover);
    out.exploratory = inst.m() < 3;
  } else {
    out.certificate = certify_no(md, inst);
  }
  out.ok = out.certificate.valid;
  return out;
}

EquivalenceVerdict equivalence_check(const ThreeDMInstance& inst) {
  inst.validate();
  if (inst.n > kEquivalenceMaxN || inst.m() > kEquivalenceMaxM) {
    throw CapacityError("equivalence_check is limited to n <= " + std::to_string(kEquivalenceMaxN) +
                        ", m <= " + std::to_string(kEquivalenceMaxM));
  }
  const MdInstance md = build_md(inst);
  return equivalence_check(inst, md);
}

}  // namespace mdred
