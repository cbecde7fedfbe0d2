// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Thresholds are pinned below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mdred/certify.hpp"
#include "mdred/md.hpp"
#include "mdred/mrs.hpp"
#include "mdred/resolving.hpp"
#include "mdred/tdm.hpp"
#include "mdred/width.hpp"
#include "support.hpp"

namespace {

using namespace mdred;
using Clock = std::chrono::steady_clock;

constexpr std::size_t kMinCorpus = 20;
constexpr int kMaxN = 3;
constexpr int kMaxM = 6;
constexpr double kSelectorSeconds = 10.0;
constexpr double kYesSecondsPerInstance = 60.0;
constexpr std::size_t kMinNoInstances = 5;
constexpr std::size_t kMaxSearchers = 25;
constexpr int kMaxWidth = 24;
constexpr int kTinyGraphs = 100;
constexpr int kTinyMaxVertices = 10;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Entry {
  std::string name;
  ThreeDMInstance inst;
  bool planted = false;
};

// Mixed planted / random instances over n <= 3 and 3 <= m <= 6, plus a few
// random ones with fewer tuples.
std::vector<Entry> corpus() {
  std::vector<Entry> out;
  std::uint64_t seed = 1000;
  for (int n = 1; n <= kMaxN; ++n) {
    for (int m = 3; m <= kMaxM; ++m) {
      for (bool planted : {true, false}) {
        if (!planted && (m + n) % 2 == 1) continue;
        std::ostringstream name;
        name << (planted ? "planted" : "random") << " n=" << n << " m=" << m << " seed=" << seed;
        out.push_back({name.str(), gen_3dm(n, m, seed, planted), planted});
        ++seed;
      }
    }
  }
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 2}}) {
    std::ostringstream name;
    name << "random n=" << n << " m=" << m << " seed=" << seed;
    out.push_back({name.str(), gen_3dm(n, m, seed, false), false});
    ++seed;
  }
  return out;
}

std::vector<ThreeDMInstance> curated_no_instances() {
  std::vector<ThreeDMInstance> out = {
      {2, {{1, 1, 1}, {1, 2, 2}, {2, 1, 2}}},
      {2, {{1, 1, 1}, {2, 2, 1}, {1, 2, 2}, {2, 1, 2}}},
      {2, {{1, 1, 2}, {2, 2, 2}, {1, 2, 1}}},
      {3, {{1, 1, 1}, {2, 2, 2}, {3, 3, 1}, {1, 2, 2}, {2, 3, 1}}},
      {3, {{1, 1, 1}, {2, 2, 2}, {3, 3, 2}, {1, 3, 3}, {2, 1, 3}, {3, 2, 1}}},
  };
  // plus the first random no-instances of each size
  for (int n = 2; n <= 3; ++n) {
    for (std::uint64_t seed = 0;; ++seed) {
      ThreeDMInstance i = gen_3dm(n, 5, 7000 + seed, false);
      if (!solve_3dm(i)) {
        out.push_back(std::move(i));
        break;
      }
    }
  }
  return out;
}

class Gate {
 public:
  void line(int id, bool ok, const std::string& what, const std::string& detail) {
    std::printf("%s  %2d  %s: %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
    std::fflush(stdout);
    all_ok_ = all_ok_ && ok;
  }
  bool ok() const { return all_ok_; }

 private:
  bool all_ok_ = true;
};

std::string first(const std::vector<std::string>& v) { return v.empty() ? "" : "; first: " + v.front(); }

}  // namespace

int main() {
  Gate gate;
  const std::vector<Entry> entries = corpus();
  std::size_t planted_count = 0;
  for (const Entry& e : entries) planted_count += e.planted;
  std::printf("corpus: %zu instances (%zu planted), n <= %d, m <= %d\n", entries.size(), planted_count, kMaxN,
              kMaxM);

  // Build G for every corpus instance; criteria 1-4 run on G.
  std::vector<MrsInstance> gs;
  {
    const auto t0 = Clock::now();
    std::size_t checks = 0;
    std::vector<std::string> bad;
    for (const Entry& e : entries) {
      gs.push_back(build_mrs(e.inst));
      const Report r = verify_lemma_resolve(gs.back(), e.inst);
      const std::size_t want = 3u * e.inst.n * e.inst.n * e.inst.m();
      checks += r.checks;
      if (r.checks != want) bad.push_back(e.name + ": " + std::to_string(r.checks) + " checks");
      for (const auto& v : r.violations) bad.push_back(e.name + ": " + v);
    }
    const double secs = seconds_since(t0);
    std::ostringstream d;
    d << entries.size() << " instances, " << checks << " checks, " << bad.size() << " violations, " << secs
      << " s (limit " << kSelectorSeconds << " s)" << first(bad);
    gate.line(1, entries.size() >= kMinCorpus && bad.empty() && secs < kSelectorSeconds,
              "selector resolution matches tuple membership", d.str());
  }
  {
    std::size_t checks = 0;
    std::vector<std::string> bad;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const Report r = verify_distance_identities(gs[k].graph, gs[k].layout, entries[k].inst);
      checks += r.checks;
      for (const auto& v : r.violations) bad.push_back(entries[k].name + ": " + v);
    }
    std::ostringstream d;
    d << checks << " identities, " << bad.size() << " violations" << first(bad);
    gate.line(2, bad.empty() && checks > 0, "constructed path distances are exact", d.str());
  }
  {
    std::size_t yes = 0;
    std::vector<std::string> bad;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const bool a = solve_mrs(gs[k]).has_value();
      const bool b = solve_3dm(entries[k].inst).has_value();
      yes += b;
      if (a != b) bad.push_back(entries[k].name);
    }
    std::ostringstream d;
    d << entries.size() << " instances (" << yes << " yes), " << bad.size() << " disagreements" << first(bad);
    gate.line(3, bad.empty(), "multicolored resolving set agrees with 3DM", d.str());
  }
  {
    std::vector<std::string> bad;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (!verify_fvs(gs[k]).acyclic) bad.push_back(entries[k].name);
    }
    std::ostringstream d;
    d << entries.size() << " graphs, " << bad.size() << " with a cycle avoiding the hubs" << first(bad);
    gate.line(4, bad.empty(), "the nine hubs form a feedback vertex set", d.str());
  }

  // Criterion 5 over every (n, m) in range plus the corpus; the corpus G'
  // are kept for the rest.
  std::vector<MdInstance> mds;
  {
    std::vector<std::string> bad;
    std::size_t built = 0;
    for (int n = 1; n <= kMaxN; ++n) {
      for (int m = 1; m <= kMaxM; ++m) {
        const MdInstance md = build_md(gen_3dm(n, m, 500 + 10 * n + m, false));
        ++built;
        if (static_cast<long long>(md.gadgets.size()) != 34LL * n * m + 18 * n || md.k != 34LL * n * m + 19 * n) {
          bad.push_back("n=" + std::to_string(n) + " m=" + std::to_string(m));
        }
      }
    }
    for (const Entry& e : entries) {
      mds.push_back(build_md(e.inst));
      ++built;
      const long long n = e.inst.n;
      const long long m = e.inst.m();
      if (static_cast<long long>(mds.back().gadgets.size()) != 34 * n * m + 18 * n ||
          mds.back().k != 34 * n * m + 19 * n) {
        bad.push_back(e.name);
      }
    }
    std::ostringstream d;
    d << built << " graphs, " << bad.size() << " mismatches" << first(bad);
    gate.line(5, bad.empty(), "gadget count 34nm+18n and budget 34nm+19n", d.str());
  }
  {
    std::size_t gadgets = 0;
    std::vector<std::string> bad;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const Report r = verify_twin_exclusivity(mds[k]);
      gadgets += r.checks;
      for (const auto& v : r.violations) bad.push_back(entries[k].name + ": " + v);
    }
    std::ostringstream d;
    d << gadgets << " gadgets, " << bad.size() << " with extra resolvers" << first(bad);
    gate.line(6, bad.empty(), "twin pairs are resolved only by themselves", d.str());
  }
  {
    std::size_t checks = 0;
    std::vector<std::string> bad;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      for (const Report& r : {verify_forced_set_lemma(mds[k]), verify_forced_vertex_lemma(mds[k])}) {
        checks += r.checks;
        for (const auto& v : r.violations) bad.push_back(entries[k].name + ": " + r.name + ": " + v);
      }
    }
    std::ostringstream d;
    d << checks << " checks, " << bad.size() << " violations" << first(bad);
    gate.line(7, bad.empty(), "pq classification and twin/pair equidistance", d.str());
  }
  {
    std::size_t checks = 0;
    std::vector<std::string> bad;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const Report r = verify_distance_preservation(mds[k]);
      checks += r.checks;
      for (const auto& v : r.violations) bad.push_back(entries[k].name + ": " + v);
    }
    std::ostringstream d;
    d << checks << " selector/pair distances, " << bad.size() << " violations" << first(bad);
    gate.line(8, bad.empty(), "G' preserves selector-to-pair distances of G", d.str());
  }
  {
    std::size_t count = 0;
    double slowest = 0;
    std::vector<std::string> bad;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const Entry& e = entries[k];
      if (!e.planted || e.inst.m() < 3) continue;
      ++count;
      const auto t0 = Clock::now();
      const auto cover = solve_3dm(e.inst);
      const Certificate c = certify_yes(mds[k], e.inst, *cover);
      const double secs = seconds_since(t0);
      slowest = std::max(slowest, secs);
      if (!c.valid || static_cast<long long>(c.resolving_set.size()) != mds[k].k) {
        bad.push_back(e.name + (c.witness ? ": unresolved " + c.witness_labels + " in " + c.witness_cell : ""));
      } else if (secs >= kYesSecondsPerInstance) {
        bad.push_back(e.name + ": " + std::to_string(secs) + " s");
      }
    }
    std::ostringstream d;
    d << count << " planted instances, " << bad.size() << " failures, slowest " << slowest << " s (limit "
      << kYesSecondsPerInstance << " s)" << first(bad);
    gate.line(9, bad.empty() && count > 0, "resolving set of size k from every cover", d.str());
  }
  {
    const auto nos = curated_no_instances();
    std::vector<std::string> bad;
    for (const ThreeDMInstance& i : nos) {
      const MdInstance md = build_md(i);
      const Certificate c = certify_no(md, i);
      bool abc = true;
      for (const Fact& f : c.facts) {
        if (f.name.rfind("A:", 0) == 0 || f.name.rfind("B:", 0) == 0 || f.name.rfind("C:", 0) == 0) {
          abc = abc && f.ok;
        }
      }
      if (!c.valid || !abc) bad.push_back(format_3dm(i));
    }
    std::ostringstream d;
    d << nos.size() << " no-instances (n=2,3), " << bad.size() << " without a valid certificate";
    gate.line(10, bad.empty() && nos.size() >= kMinNoInstances, "NO certificates with facts A, B, C", d.str());
  }
  {
    std::size_t worst = 0;
    int worst_width = -1;
    std::vector<std::string> bad;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const NodeSearchStrategy s = synth_strategy(mds[k]);
      const StrategyCheck c = verify_strategy(mds[k].graph, s);
      if (c.violation || !c.monotone || !c.all_cleared || !c.smooth || c.max_searchers > kMaxSearchers) {
        bad.push_back(entries[k].name + (c.violation ? ": " + c.violation->message : ""));
        continue;
      }
      worst = std::max(worst, c.max_searchers);
      const auto bags = strategy_to_decomposition(mds[k].graph, s);
      const DecompositionCheck d = validate_path_decomposition(mds[k].graph, bags);
      if (!d.ok() || *d.width > kMaxWidth || *d.width != static_cast<int>(c.max_searchers) - 1) {
        bad.push_back(entries[k].name + ": decomposition");
        continue;
      }
      worst_width = std::max(worst_width, *d.width);
    }
    std::ostringstream d;
    d << entries.size() << " strategies, max searchers " << worst << " (limit " << kMaxSearchers << "), max width "
      << worst_width << " (limit " << kMaxWidth << ")" << first(bad);
    gate.line(11, bad.empty(), "monotone search and path decomposition", d.str());
  }
  {
    std::mt19937_64 rng(12);
    std::vector<std::string> bad;
    for (int t = 0; t < kTinyGraphs; ++t) {
      const int n = testing::uniform(rng, 1, kTinyMaxVertices);
      const LabeledGraph g = testing::random_graph(n, 0.2 + 0.05 * (t % 8), rng);
      const auto set = metric_dimension_tiny(g, n);
      const int want = testing::naive_metric_dimension(g);
      if (!set || static_cast<int>(set->size()) != want || !is_resolving_set(g, *set).ok()) {
        bad.push_back("graph " + std::to_string(t));
      }
    }
    std::size_t instances = 0;
    for (int n = 1; n <= kMaxN; ++n) {
      for (int m = 1; m <= kMaxM; ++m) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
          const ThreeDMInstance i = gen_3dm(n, m, 9000 + seed * 100 + 10 * n + m, false);
          ++instances;
          if (solve_3dm(i).has_value() != testing::enumerate_3dm(i)) bad.push_back(format_3dm(i));
        }
      }
    }
    std::ostringstream d;
    d << kTinyGraphs << " tiny graphs, " << instances << " 3DM instances, " << bad.size() << " disagreements"
      << first(bad);
    gate.line(12, bad.empty(), "exact solvers agree with enumeration", d.str());
  }

  std::printf("%s\n", gate.ok() ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL");
  return gate.ok() ? 0 : 1;
}
