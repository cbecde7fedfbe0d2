#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdred/decomposition.hpp"
#include "mdred/graph.hpp"
#include "mdred/md.hpp"

namespace mdred {

enum class MoveKind : std::uint8_t { Place, Remove };

struct Move {
  MoveKind kind = MoveKind::Place;
  VertexId v = 0;

  static Move place(VertexId v) { return {MoveKind::Place, v}; }
  static Move remove(VertexId v) { return {MoveKind::Remove, v}; }
  friend bool operator==(const Move&, const Move&) = default;
};

struct NodeSearchStrategy {
  std::vector<Move> moves;
};

struct SearchStep {
  std::size_t occupied = 0;
  std::size_t cleared = 0;
  bool recontaminated = false;
};

struct StrategyViolation {
  std::size_t step = 0;
  std::string message;
};

struct StrategyCheck {
  std::size_t max_searchers = 0;
  bool monotone = true;
  bool all_cleared = false;
  bool smooth = true;
  std::vector<SearchStep> trace;
  std::optional<StrategyViolation> violation;

  bool ok() const noexcept { return !violation && monotone && all_cleared; }
};

/// Plays the node-search game. An edge clears once both endpoints are
/// occupied; after a Remove, contamination spreads from every contaminated
/// edge through unoccupied vertices. Illegal moves stop the simulation with a
/// violation naming the step.
StrategyCheck verify_strategy(const LabeledGraph& g, const NodeSearchStrategy& strat);

/// Game state exposed for property tests: which edges are contaminated, by
/// edge id, given the occupied set and a current contamination marking.
/// Returns the least fixpoint of the spread rule (a slow full closure).
std::vector<char> contamination_closure(const LabeledGraph& g, const std::vector<char>& occupied,
                                        std::vector<char> contaminated);

/// Searcher schedule for G': permanent guards on the hubs, one round per
/// class with the anchors guarded, then one round per listed pair.
NodeSearchStrategy synth_strategy(const MdInstance& md);

/// Occupied sets after every move (empty ones dropped). Throws ArgumentError
/// unless the strategy is legal, smooth, monotone and clears every edge.
std::vector<Bag> strategy_to_decomposition(const LabeledGraph& g, const NodeSearchStrategy& strat);

/// One move per line: "+ <vertex-id>" or "- <vertex-id>".
void write_strategy(std::ostream& out, const NodeSearchStrategy& strat);
/// Throws ParseError with the offending line number.
NodeSearchStrategy read_strategy(std::istream& in);

}  // namespace mdred
