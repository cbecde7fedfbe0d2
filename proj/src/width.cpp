#include "mdred/width.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "mdred/error.hpp"

namespace mdred {

namespace {

class Game {
 public:
  explicit Game(const LabeledGraph& g)
      : g_(g), occupied_(g.vertex_count(), 0), contaminated_(g.edge_count(), 1), placed_(g.vertex_count(), 0) {}

  // Returns an error message for an illegal move.
  std::optional<std::string> apply(const Move& mv, bool& recontaminated) {
    recontaminated = false;
    if (!g_.contains(mv.v)) return "unknown vertex " + std::to_string(mv.v);
    const VertexId v = mv.v;
    if (mv.kind == MoveKind::Place) {
      if (occupied_[v]) return "place on occupied vertex " + g_.label(v).to_string();
      if (placed_[v]) smooth_ = false;
      placed_[v] = 1;
      occupied_[v] = 1;
      ++count_;
      const auto nb = g_.neighbors(v);
      const auto ids = g_.incident_edges(v);
      for (std::size_t k = 0; k < nb.size(); ++k) {
        if (occupied_[nb[k]] && contaminated_[ids[k]]) {
          contaminated_[ids[k]] = 0;
          ++cleared_;
        }
      }
    } else {
      if (!occupied_[v]) return "remove from unoccupied vertex " + g_.label(v).to_string();
      occupied_[v] = 0;
      --count_;
      recontaminated = spread_from(v);
    }
    return std::nullopt;
  }

  std::size_t occupied_count() const noexcept { return count_; }
  std::size_t cleared() const noexcept { return cleared_; }
  bool smooth() const noexcept { return smooth_; }

 private:
  // Before the remove, every unoccupied vertex touches either only clear or
  // only contaminated edges; only v can break that, so spreading from v
  // restores the fixpoint.
  bool spread_from(VertexId v) {
    bool dirty = false;
    for (std::int32_t e : g_.incident_edges(v)) dirty = dirty || contaminated_[e];
    if (!dirty) return false;
    bool changed = false;
    std::vector<VertexId> stack{v};
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      const auto nb = g_.neighbors(x);
      const auto ids = g_.incident_edges(x);
      for (std::size_t k = 0; k < nb.size(); ++k) {
        if (contaminated_[ids[k]]) continue;
        contaminated_[ids[k]] = 1;
        --cleared_;
        changed = true;
        if (!occupied_[nb[k]]) stack.push_back(nb[k]);
      }
    }
    return changed;
  }

  const LabeledGraph& g_;
  std::vector<char> occupied_;
  std::vector<char> contaminated_;
  std::vector<char> placed_;
  std::size_t count_ = 0;
  std::size_t cleared_ = 0;
  bool smooth_ = true;
};

class Synth {
 public:
  explicit Synth(const MdInstance& md) : md_(md), g_(md.graph), occupied_(g_.vertex_count(), 0) {
    for (const ForcedVertexGadget& fg : md.gadgets) at_connector_[fg.connector].push_back(&fg);
  }

  NodeSearchStrategy run() {
    const MrsLayout& l = md_.layout();
    for (VertexId h : l.hubs) occupy(h);

    for (int i = 1; i <= l.n; ++i) {
      for (int h = 1; h <= 2; ++h) {
        const ForcedSetAnchor& a = md_.anchor(i, h);
        occupy(a.p);
        occupy(a.q);
        occupy(a.pi);
      }
      for (int h = 1; h <= 2; ++h) {
        for (int r = 1; r <= 3; ++r) {
          sweep(g_.path(pi_hub_path_id(i, h, 'a', r)));
          sweep(g_.path(pi_hub_path_id(i, h, 'c', r)));
        }
      }
      for (int j = 1; j <= l.m; ++j) selector_round(i, j);
      for (int h = 1; h <= 2; ++h) {
        const ForcedSetAnchor& a = md_.anchor(i, h);
        release(a.p);
        release(a.q);
        release(a.pi);
      }
    }

    for (const PairIds& pr : l.pairs) {
      occupy(pr.u);
      occupy(pr.v);
      std::vector<VertexId> extra;
      for (const ForcedVertexGadget& fg : md_.gadgets) {
        if (fg.connector_is_new && std::count(fg.attached_to.begin(), fg.attached_to.end(), pr.u)) {
          occupy(fg.connector);
          extra.push_back(fg.connector);
        }
      }
      for (char side : {'u', 'v'}) {
        for (char hub : {'a', 'b', 'c'}) sweep(g_.path(pair_path_id(side, pr.r, pr.index, hub)));
      }
      for (VertexId c : extra) release(c);
      release(pr.u);
      release(pr.v);
    }

    for (VertexId h : l.hubs) release(h);
    return std::move(out_);
  }

 private:
  void selector_round(int i, int j) {
    const VertexId s = md_.layout().selector(i, j);
    occupy(s);
    occupy(md_.mid(i, j, 1));
    occupy(md_.mid(i, j, 2));

    for (int r = 1; r <= 3; ++r) {
      for (char hub : {'a', 'b', 'c'}) {
        const PathRecord& base = g_.path(selector_path_id(i, j, hub, r));
        const VertexId y = base.at(1);
        occupy(y);
        sweep(base);
        for (int h = 1; h <= 2; ++h) sweep(g_.path(pi_path_id(h, i, j, hub, r)));
        release(y);
      }
    }
    for (int h = 1; h <= 2; ++h) {
      // P(s, p_i^h) carries P^{3-h}(i,j,p_i^h) at its first internal vertex,
      // whose middle feeds the L-path from q_i^h.
      const PathRecord& base = g_.path(forced_path_id(i, j, h));
      const VertexId y = base.at(1);
      occupy(y);
      sweep(base);
      sweep(g_.path(pi_cross_path_id(3 - h, i, j)));
      sweep(g_.path(l_path_id(i, j, h)));
      release(y);
    }

    release(md_.mid(i, j, 1));
    release(md_.mid(i, j, 2));
    release(s);
  }

  void place(VertexId v) {
    out_.moves.push_back(Move::place(v));
    occupied_[v] = 1;
  }

  void release(VertexId v) {
    out_.moves.push_back(Move::remove(v));
    occupied_[v] = 0;
  }

  // Place on v and clear every gadget triangle hanging off it.
  void occupy(VertexId v) {
    place(v);
    const auto it = at_connector_.find(v);
    if (it == at_connector_.end()) return;
    for (const ForcedVertexGadget* fg : it->second) {
      place(fg->twin1);
      place(fg->twin2);
      release(fg->twin1);
      release(fg->twin2);
    }
  }

  // Two alternating searchers walk the path; vertices that are already
  // guarded are stepped over. Both endpoints must be occupied.
  void sweep(const PathRecord& p) {
    std::optional<VertexId> trailing;
    for (VertexId x : p.internals) {
      if (occupied_[x]) {
        if (trailing) release(*trailing);
        trailing.reset();
        continue;
      }
      occupy(x);
      if (trailing) release(*trailing);
      trailing = x;
    }
    if (trailing) release(*trailing);
  }

  const MdInstance& md_;
  const LabeledGraph& g_;
  std::vector<char> occupied_;
  std::unordered_map<VertexId, std::vector<const ForcedVertexGadget*>> at_connector_;
  NodeSearchStrategy out_;
};

}  // namespace

StrategyCheck verify_strategy(const LabeledGraph& g, const NodeSearchStrategy& strat) {
  StrategyCheck out;
  Game game(g);
  out.trace.reserve(strat.moves.size());
  for (std::size_t step = 0; step < strat.moves.size(); ++step) {
    bool recontaminated = false;
    if (auto err = game.apply(strat.moves[step], recontaminated)) {
      out.violation = StrategyViolation{step, "step " + std::to_string(step) + ": " + *err};
      out.smooth = game.smooth();
      return out;
    }
    out.max_searchers = std::max(out.max_searchers, game.occupied_count());
    out.monotone = out.monotone && !recontaminated;
    out.trace.push_back({game.occupied_count(), game.cleared(), recontaminated});
  }
  out.smooth = game.smooth();
  out.all_cleared = game.cleared() == g.edge_count();
  return out;
}

std::vector<char> contamination_closure(const LabeledGraph& g, const std::vector<char>& occupied,
                                        std::vector<char> contaminated) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 0; static_cast<std::size_t>(v) < g.vertex_count(); ++v) {
      if (occupied[v]) continue;
      bool dirty = false;
      for (std::int32_t e : g.incident_edges(v)) dirty = dirty || contaminated[e];
      if (!dirty) continue;
      for (std::int32_t e : g.incident_edges(v)) {
        if (!contaminated[e]) {
          contaminated[e] = 1;
          changed = true;
        }
      }
    }
  }
  return contaminated;
}

NodeSearchStrategy synth_strategy(const MdInstance& md) { return Synth(md).run(); }

std::vector<Bag> strategy_to_decomposition(const LabeledGraph& g, const NodeSearchStrategy& strat) {
  const StrategyCheck check = verify_strategy(g, strat);
  if (check.violation) throw ArgumentError("illegal strategy: " + check.violation->message);
  if (!check.smooth) throw ArgumentError("strategy is not smooth: some vertex is placed twice");
  if (!check.monotone) throw ArgumentError("strategy is not monotone");
  if (!check.all_cleared) throw ArgumentError("strategy leaves contaminated edges");

  std::vector<Bag> bags;
  std::vector<VertexId> current;
  for (const Move& mv : strat.moves) {
    if (mv.kind == MoveKind::Place) {
      current.push_back(mv.v);
    } else {
      current.erase(std::find(current.begin(), current.end(), mv.v));
    }
    if (!current.empty()) bags.push_back(current);
  }
  return bags;
}

void write_strategy(std::ostream& out, const NodeSearchStrategy& strat) {
  for (const Move& mv : strat.moves) out << (mv.kind == MoveKind::Place ? '+' : '-') << ' ' << mv.v << '\n';
}

NodeSearchStrategy read_strategy(std::istream& in) {
  NodeSearchStrategy s;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string op;
    long long v = -1;
    std::string rest;
    if (!(ls >> op >> v) || (ls >> rest) || (op != "+" && op != "-") || v < 0 || v > INT32_MAX) {
      throw ParseError("expected '+ <vertex-id>' or '- <vertex-id>'", lineno);
    }
    s.moves.push_back(op == "+" ? Move::place(static_cast<VertexId>(v)) : Move::remove(static_cast<VertexId>(v)));
  }
  return s;
}

}  // namespace mdred
