#include <gtest/gtest.h>

#include "mdred/certify.hpp"
#include "mdred/error.hpp"
#include "support.hpp"

namespace mdred {
namespace {

using testing::reference_bfs;

ThreeDMInstance inst(int n, std::vector<Triple> t) { return ThreeDMInstance{n, std::move(t)}; }

const ThreeDMInstance kNoInstance = inst(2, {{1, 1, 1}, {1, 2, 2}, {2, 1, 2}});

TEST(PqClassification, SelectorsResolveTheirOwnClass) {
  const MdInstance md = build_md(gen_3dm(1, 2, 3, true));
  const PqClassification pq = classify_pq(md);
  for (int j = 1; j <= 2; ++j) {
    const VertexId s = md.layout().selector(1, j);
    EXPECT_EQ(pq.category[s], PqCategory::InX);
    EXPECT_EQ(pq.x_class[s], 1);
    EXPECT_EQ(pq.resolved[s], 2);
    EXPECT_TRUE(pq.resolves(s, 1, 1));
    EXPECT_TRUE(pq.resolves(s, 1, 2));
    const auto rs = resolver_set(md.graph, md.anchor(1, 1).p, md.anchor(1, 1).q);
    EXPECT_TRUE(std::binary_search(rs.begin(), rs.end(), s));
  }
  int gadget_vertices = 0;
  for (const ForcedVertexGadget& fg : md.gadgets) {
    for (VertexId v : {fg.twin1, fg.twin2, fg.connector}) {
      EXPECT_EQ(pq.category[v], PqCategory::Gadget);
      EXPECT_EQ(pq.resolved[v], 0) << md.graph.label(v).to_string();
      ++gadget_vertices;
    }
  }
  EXPECT_EQ(gadget_vertices, 3 * 86);
}

TEST(PqClassification, OtherClassesUntouched) {
  const MdInstance md = build_md(gen_3dm(2, 2, 3, true));
  const PqClassification pq = classify_pq(md);
  for (int j = 1; j <= 2; ++j) {
    const VertexId s = md.layout().selector(1, j);
    EXPECT_FALSE(pq.resolves(s, 2, 1));
    EXPECT_FALSE(pq.resolves(s, 2, 2));
  }
  // cross-check the counts against a reference BFS from each anchor
  std::vector<int> count(md.graph.vertex_count(), 0);
  for (int i = 1; i <= 2; ++i) {
    for (int h = 1; h <= 2; ++h) {
      const auto dp = reference_bfs(md.graph, md.anchor(i, h).p);
      const auto dq = reference_bfs(md.graph, md.anchor(i, h).q);
      for (std::size_t v = 0; v < count.size(); ++v) count[v] += dp[v] != dq[v];
    }
  }
  for (std::size_t v = 0; v < count.size(); ++v) ASSERT_EQ(count[v], pq.resolved[v]);
}

TEST(ForcedSet, ReportPasses) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}}) {
    const MdInstance md = build_md(gen_3dm(n, m, 17, false));
    const Report rep = verify_forced_set_lemma(md);
    EXPECT_TRUE(rep.ok()) << rep.violations.front();
    EXPECT_EQ(rep.checks, md.graph.vertex_count());
  }
}

TEST(ForcedVertex, TwinsNeverSeparatePairs) {
  const MdInstance md = build_md(gen_3dm(1, 2, 1, false));
  const Report rep = verify_forced_vertex_lemma(md);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.checks, 86u * 2u * 3u);

  for (const ForcedVertexGadget& fg : md.gadgets) {
    if (fg.id != "F1(u[1,1])") continue;
    const PairIds& pr = md.layout().pair(1, 1);
    const auto d = reference_bfs(md.graph, fg.twin1);
    EXPECT_EQ(d[pr.u], 2);
    EXPECT_EQ(d[pr.v], 2);
  }

  // a selector is not a forced vertex and does separate its pairs
  const VertexId s = md.layout().selector(1, 1);
  const PairIds& pr = md.layout().pair(1, md.base.layout.n);
  EXPECT_TRUE(resolves(md.graph, s, pr.u, pr.v));
}

TEST(TwinExclusivity, EveryGadget) {
  const MdInstance md = build_md(gen_3dm(2, 3, 2, true));
  const Report rep = verify_twin_exclusivity(md);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.checks, md.gadgets.size());
  const ForcedVertexGadget& fg = md.gadgets[7];
  EXPECT_EQ(resolver_set(md.graph, fg.twin1, fg.twin2), (std::vector<VertexId>{fg.twin1, fg.twin2}));
  EXPECT_FALSE(resolves(md.graph, fg.connector, fg.twin1, fg.twin2));
}

TEST(PairResolvers, SelectorsMatchTuples) {
  const MdInstance one = build_md(inst(1, {{1, 1, 1}}));
  const PairIds& pr = one.layout().pair(1, 1);
  const auto rs = resolver_set(one.graph, pr.u, pr.v);
  std::vector<VertexId> in_x;
  for (VertexId v : rs) {
    if (one.graph.label(v).role == Role::S) in_x.push_back(v);
  }
  EXPECT_EQ(in_x, std::vector<VertexId>{one.layout().selector(1, 1)});

  const ThreeDMInstance i = gen_3dm(3, 4, 2, false);
  const MdInstance md = build_md(i);
  const Report rep = verify_pair_resolvers(md, i);
  EXPECT_TRUE(rep.ok());
}

TEST(Regions, Classifier) {
  const MdInstance md = build_md(inst(1, {{1, 1, 1}}));
  const LabeledGraph& g = md.graph;
  auto region = [&](const std::string& label) { return vertex_region(g, *g.find(label)); };
  EXPECT_EQ(region("s[1,1]"), "H");
  EXPECT_EQ(region("pv[P(s[1,1],a[2]),4]"), "H");
  EXPECT_EQ(region("p[1,2]"), "U");
  EXPECT_EQ(region("pv[P(s[1,1],p[1,1]),4]"), "U");
  EXPECT_EQ(region("pv[P[1](1,1,b[2]),3]"), "Pi");
  EXPECT_EQ(region("pi[1,1]"), "S");
  EXPECT_EQ(region("pv[P(pi[1,1],a[3]),2]"), "S");
  EXPECT_EQ(region("q[1,2]"), "L");
  EXPECT_EQ(region("pv[P(q[1,1],mid(P[2](1,1,p[1,1]))),9]"), "L");
  EXPECT_EQ(region("u[2,1]"), "R");
  EXPECT_EQ(region("b[3]"), "R");
  EXPECT_EQ(region("pv[P(v[1,1],c[1]),3]"), "R");
  EXPECT_EQ(region("twin2[Fmid(1,1,1)]"), "F");
  EXPECT_EQ(region("conn[F1(u[1,1])]"), "F");
  EXPECT_EQ(region_cell(g, *g.find("twin1[Fmid(1,1,1)]"), *g.find("p[1,1]")), "U x F");
  EXPECT_EQ(region_cell(g, *g.find("s[1,1]"), *g.find("q[1,1]")), "L x H");
}

TEST(CertifyYes, PlantedInstances) {
  for (auto [n, m, k] : std::vector<std::tuple<int, int, long long>>{{1, 3, 121}, {2, 3, 242}}) {
    const ThreeDMInstance i = gen_3dm(n, m, 21, true);
    const MdInstance md = build_md(i);
    const auto cover = solve_3dm(i);
    ASSERT_TRUE(cover.has_value());
    const Certificate c = certify_yes(md, i, *cover);
    EXPECT_TRUE(c.valid);
    EXPECT_EQ(c.kind, CertificateKind::Yes);
    EXPECT_EQ(static_cast<long long>(c.resolving_set.size()), k);
    EXPECT_FALSE(c.witness.has_value());
    EXPECT_TRUE(is_resolving_set(md.graph, c.resolving_set).ok());
  }
}

TEST(CertifyYes, SmallPlantedInstanceWithTwoTuples) {
  const ThreeDMInstance i = gen_3dm(1, 2, 4, true);
  const MdInstance md = build_md(i);
  const Certificate c = certify_yes(md, i, *solve_3dm(i));
  EXPECT_EQ(c.resolving_set.size(), 87u);
  EXPECT_TRUE(c.valid);
}

TEST(CertifyYes, DroppingATwinExposesTheGadget) {
  const ThreeDMInstance i = gen_3dm(1, 3, 2, true);
  const MdInstance md = build_md(i);
  const Certificate c = certify_yes(md, i, *solve_3dm(i));
  for (std::size_t k : {std::size_t{0}, std::size_t{40}, md.gadgets.size() - 1}) {
    std::vector<VertexId> set = c.resolving_set;
    set.erase(set.begin() + static_cast<std::ptrdiff_t>(k));
    const ResolvingCheck check = is_resolving_set(md.graph, set);
    ASSERT_FALSE(check.ok());
    const ForcedVertexGadget& fg = md.gadgets[k];
    EXPECT_EQ(std::minmax(check.witness->x, check.witness->y), std::minmax(fg.twin1, fg.twin2));
  }
}

TEST(CertifyYes, TwinDesignationDoesNotMatter) {
  const ThreeDMInstance i = gen_3dm(2, 4, 3, true);
  const MdInstance md = build_md(i);
  const auto cover = *solve_3dm(i);
  const Certificate a = certify_yes(md, i, cover, TwinChoice::First);
  const Certificate b = certify_yes(md, i, cover, TwinChoice::Second);
  EXPECT_EQ(a.valid, b.valid);
  EXPECT_TRUE(b.valid);
  EXPECT_NE(a.resolving_set, b.resolving_set);
}

TEST(CertifyYes, SupersetsStillResolve) {
  const ThreeDMInstance i = gen_3dm(1, 3, 9, true);
  const MdInstance md = build_md(i);
  const Certificate c = certify_yes(md, i, *solve_3dm(i));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    std::vector<VertexId> set = c.resolving_set;
    set.push_back(testing::uniform(rng, 0, static_cast<int>(md.graph.vertex_count()) - 1));
    EXPECT_TRUE(is_resolving_set(md.graph, set).ok());
  }
}

TEST(CertifyYes, RejectsNonCover) {
  const ThreeDMInstance i = gen_3dm(2, 3, 1, true);
  const MdInstance md = build_md(i);
  EXPECT_THROW(certify_yes(md, i, {1, 1}), ArgumentError);
}

TEST(CertifyNo, CuratedNoInstance) {
  ASSERT_FALSE(solve_3dm(kNoInstance).has_value());
  const MdInstance md = build_md(kNoInstance);
  const Certificate c = certify_no(md, kNoInstance);
  EXPECT_EQ(c.kind, CertificateKind::No);
  EXPECT_TRUE(c.valid);
  std::set<std::string> names;
  for (const Fact& f : c.facts) {
    EXPECT_TRUE(f.ok) << f.name << ": " << f.detail;
    names.insert(f.name);
  }
  for (const char* want : {"oracle-no", "A:twin-exclusivity", "B:pq-classification", "C:pair-resolvers", "budget"}) {
    EXPECT_TRUE(names.count(want)) << want;
  }
  EXPECT_FALSE(c.reasoning.empty());
}

TEST(CertifyNo, YesInstanceIsRefuted) {
  const ThreeDMInstance i = inst(2, {{1, 1, 1}, {1, 2, 2}, {2, 1, 2}, {2, 2, 2}});
  const MdInstance md = build_md(i);
  const Certificate c = certify_no(md, i);
  EXPECT_FALSE(c.valid);
  EXPECT_FALSE(c.facts.front().ok);
  EXPECT_EQ(c.facts.front().name, "oracle-no");
}

TEST(Equivalence, BothBranches) {
  const EquivalenceVerdict yes = equivalence_check(gen_3dm(2, 4, 1, true));
  EXPECT_TRUE(yes.yes_instance);
  EXPECT_TRUE(yes.ok);
  EXPECT_FALSE(yes.exploratory);

  const EquivalenceVerdict no = equivalence_check(kNoInstance);
  EXPECT_FALSE(no.yes_instance);
  EXPECT_TRUE(no.ok);

  const EquivalenceVerdict small = equivalence_check(inst(1, {{1, 1, 1}}));
  EXPECT_TRUE(small.exploratory);

  EXPECT_THROW(equivalence_check(gen_3dm(4, 4, 1, true)), CapacityError);
  EXPECT_THROW(equivalence_check(gen_3dm(2, 7, 1, true)), CapacityError);
}

}  // namespace
}  // namespace mdred
