#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mdred/md.hpp"
#include "mdred/report.hpp"
#include "mdred/resolving.hpp"
#include "mdred/tdm.hpp"

namespace mdred {

enum class PqCategory : std::uint8_t { InX, Gadget, Other };

/// For every vertex of G': its category and which forced-set pairs
/// {p_i^h, q_i^h} it resolves. Pair index is 2(i-1) + (h-1).
struct PqClassification {
  int n = 0;
  std::vector<PqCategory> category;
  std::vector<int> x_class;               // i for InX vertices, else 0
  std::vector<std::int32_t> resolved;     // number of pq pairs resolved
  std::vector<std::vector<Dist>> from_p;  // BFS from p_i^h, by pair index
  std::vector<std::vector<Dist>> from_q;

  bool resolves(VertexId v, int i, int h) const {
    const std::size_t k = 2 * static_cast<std::size_t>(i - 1) + (h - 1);
    return from_p[k][v] != from_q[k][v];
  }
};

PqClassification classify_pq(const MdInstance& md);

/// X_i vertices resolve exactly the two pq pairs of class i, gadget vertices
/// (twins and connectors) resolve none, and every other vertex at most one.
Report verify_forced_set_lemma(const MdInstance& md);
Report verify_forced_set_lemma(const MdInstance& md, const PqClassification& pq);

/// No forced vertex (twin) is at different distances from u_r^i and v_r^i.
Report verify_forced_vertex_lemma(const MdInstance& md);

/// resolver_set(twin1, twin2) is exactly the two twins, for every gadget.
Report verify_twin_exclusivity(const MdInstance& md);

/// For every listed pair: the resolvers inside X are exactly the selectors
/// whose tuple contains the pair's element, and no twin resolves it.
Report verify_pair_resolvers(const MdInstance& md, const ThreeDMInstance& inst);

/// Which region of G' a vertex belongs to: U, Pi, S, L, H, R (path families
/// and their named endpoints) or F (gadget vertices).
std::string vertex_region(const LabeledGraph& g, VertexId v);

/// "A x B" region cell of an unresolved pair, regions in U Pi S L H R F order.
std::string region_cell(const LabeledGraph& g, VertexId x, VertexId y);

struct Fact {
  std::string name;
  bool ok = false;
  std::string detail;
};

enum class CertificateKind { Yes, No };
enum class TwinChoice { First, Second };

struct Certificate {
  CertificateKind kind = CertificateKind::Yes;
  bool valid = false;
  std::vector<Fact> facts;

  // YES only
  std::vector<VertexId> resolving_set;
  std::optional<UnresolvedPair> witness;
  std::string witness_labels;
  std::string witness_cell;

  // NO only: the counting argument, one premise per line
  std::vector<std::string> reasoning;
};

/// S' = one designated twin per gadget plus the selectors of `cover`; valid
/// iff |S'| = k and S' resolves G'. Throws ArgumentError for a non-cover.
Certificate certify_yes(const MdInstance& md, const ThreeDMInstance& inst,
                        const std::vector<int>& cover, TwinChoice twins = TwinChoice::First);

/// Verified-fact ledger showing G' has no resolving set of size k. Facts that
/// fail (including a 3DM oracle that finds a cover) leave valid == false.
Certificate certify_no(const MdInstance& md, const ThreeDMInstance& inst);

inline constexpr int kEquivalenceMaxN = 3;
inline constexpr int kEquivalenceMaxM = 6;

struct EquivalenceVerdict {
  bool yes_instance = false;
  bool ok = false;
  /// Yes-instances with m < 3 are measured, not gated.
  bool exploratory = false;
  std::optional<std::vector<int>> cover;
  Certificate certificate;
};

/// Solves the source instance and demands the matching certificate.
/// Throws CapacityError beyond n <= 3, m <= 6.
EquivalenceVerdict equivalence_check(const ThreeDMInstance& inst);
EquivalenceVerdict equivalence_check(const ThreeDMInstance& inst, const MdInstance& md);

}  // namespace mdred
