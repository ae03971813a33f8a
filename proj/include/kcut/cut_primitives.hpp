#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kcut/graph.hpp"

namespace kcut {

/// All (1+epsilon)-mincuts of a graph, each stored by its canonical side
/// (the side that avoids vertex 0).
struct CutFamily {
  std::vector<Cut> cuts;
  double epsilon = 0.0;
  double mincut = 0.0;
  Vertex num_vertices = 0;
};

/// Deterministic maximum-adjacency (Stoer-Wagner) minimum cut. When several
/// cuts of the phase tie for the minimum, the one found in the latest phase
/// is kept. Requires |V| >= 2; disconnected graphs yield weight 0.
Cut global_mincut(const WeightedGraph& g);

enum class FourCutMode { exact, randomized };

struct MinFourCutOptions {
  FourCutMode mode = FourCutMode::exact;
  std::uint64_t seed = 0;
  /// Upper bound on contraction trials in randomized mode.
  std::uint64_t max_trials = 2'000'000;
  /// Vertex-count guard for exact mode.
  Vertex max_exact_vertices = 14;
};

/// Minimum-weight partition into exactly four non-empty parts, or nullopt
/// when |V| < 4 (the min-4-cut is undefined there; callers treat it as +inf).
std::optional<Partition> min_four_cut(const WeightedGraph& g, const MinFourCutOptions& options = {});

/// Vertex limit for exact_kcut_oracle. Reads KCUT_MAX_ORACLE_N when set.
Vertex default_oracle_max_vertices();

/// Exact minimum k-cut by branch-and-bound over set partitions into k blocks.
/// The bound adds, for every unplaced vertex, the cheapest way to place it
/// given the edges to already placed vertices.
Partition exact_kcut_oracle(const WeightedGraph& g, int k,
                            Vertex max_vertices = default_oracle_max_vertices());

enum class TieBreak { first, adversarial };

/// Result of repeatedly splitting parts by their induced mincut.
struct GreedySplit {
  Partition partition;
  /// Weight of each cut added, in order.
  std::vector<double> added_cuts;
};

/// Splits the part whose induced mincut is globally cheapest until `k` parts
/// exist. `first` keeps the lowest part index among ties and uses the
/// Stoer-Wagner cut; `adversarial` prefers the largest tied part and, among
/// all of its minimum cuts, the one crossing the most edges (needs the part
/// to be small enough for exhaustive cut enumeration).
GreedySplit greedy_split(const WeightedGraph& g, std::vector<VertexSet> parts, int k,
                         TieBreak tie_break = TieBreak::first);

/// Saran-Vazirani iterative greedy: k-1 cheapest-component mincut splits.
Partition greedy_sv(const WeightedGraph& g, int k, TieBreak tie_break = TieBreak::first);

struct NearMincutOptions {
  /// Largest |V| enumerated exactly (branch-and-bound over cut sides).
  Vertex max_exhaustive_vertices = 40;
  /// Beyond the exhaustive limit, fall back to repeated random contraction.
  bool allow_randomized = false;
  std::uint64_t seed = 0;
  std::uint64_t max_trials = 200'000;
};

/// Every cut of weight <= (1+epsilon) * mincut(g), canonicalized and sorted
/// by side. Exhaustive enumeration is complete; the randomized fallback is
/// complete with high probability.
CutFamily enumerate_near_mincuts(const WeightedGraph& g, double epsilon,
                                 const NearMincutOptions& options = {});

/// True iff no two cuts of the family cross.
bool is_laminar(const CutFamily& family);

}  // namespace kcut
