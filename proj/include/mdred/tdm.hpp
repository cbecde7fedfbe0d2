#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mdred {

/// Tuple A_j = {(1,x),(2,y),(3,z)}.
struct Triple {
  int x = 0;
  int y = 0;
  int z = 0;

  int coordinate(int r) const { return r == 1 ? x : (r == 2 ? y : z); }
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// 3-Dimensional Matching over the universe {1,2,3} x [n]. Tuple indices are
/// 1-based throughout (tuple j is tuples[j-1]); duplicates are allowed.
struct ThreeDMInstance {
  int n = 0;
  std::vector<Triple> tuples;

  int m() const noexcept { return static_cast<int>(tuples.size()); }
  const Triple& tuple(int j) const { return tuples.at(static_cast<std::size_t>(j - 1)); }
  bool contains(int j, int r, int x) const { return tuple(j).coordinate(r) == x; }

  /// Throws ArgumentError unless n >= 1, m >= 1 and every coordinate is in [n].
  void validate() const;

  friend bool operator==(const ThreeDMInstance&, const ThreeDMInstance&) = default;
};

/// Format: "3dm <n> <m>" then m lines "tuple <x> <y> <z>"; lines starting
/// with '#' are comments. Throws ParseError carrying the line number.
ThreeDMInstance parse_3dm(std::string_view text);
std::string format_3dm(const ThreeDMInstance& inst);

/// Deterministic in (n, m, seed) on every platform. A planted instance hides a
/// perfect cover (x, sigma(x), tau(x)) among m-n uniformly random tuples.
ThreeDMInstance gen_3dm(int n, int m, std::uint64_t seed, bool planted);

/// Cover indices j_1..j_n where tuple j_h is the one covering (1,h), or
/// nullopt. Depth-first over first coordinates with used-element pruning.
std::optional<std::vector<int>> solve_3dm(const ThreeDMInstance& inst);

/// True iff `cover` names n tuples that partition the universe.
bool is_cover(const ThreeDMInstance& inst, const std::vector<int>& cover);

}  // namespace mdred
