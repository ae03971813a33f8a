#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "kcut/graph.hpp"
#include "kcut/laminar.hpp"

namespace kcut {

/// Accuracy parameters of the reduction. eps3_final is the improvement over
/// factor 2 that the whole pipeline guarantees.
struct EpsilonConfig {
  double eps1 = 0.0;
  double eps2 = 0.0;
  double eps3_final = 0.0;
  double eps4 = 0.0;
  double eps5 = 0.0;
  double delta = 0.0;
};

/// Largest admissible delta (exclusive).
inline constexpr double kDeltaCeiling = 1.0 / 24.0;

/// eps1 = eps2 = 1/18 - 4 delta / 3, eps4 = eps5 = min(eps1, eps2) / 3,
/// eps3_final = eps4^2. Not validated, so delta may sit outside (0, 1/24).
EpsilonConfig config_for_delta(double delta);

/// config_for_delta(kDeltaCeiling / 100), validated.
EpsilonConfig default_config();

/// Human-readable list of violated constraints; empty when cfg is valid.
std::vector<std::string> config_violations(const EpsilonConfig& cfg);

/// Throws InvalidInput naming the first violated constraint.
void validate(const EpsilonConfig& cfg);

/// Least-weight k-partition seen so far. Ties keep the incumbent.
class BestTracker {
 public:
  explicit BestTracker(int k) : k_(k) {}

  int k() const { return k_; }
  const std::optional<Partition>& best() const { return best_; }
  double best_weight() const {
    return best_ ? best_->cut_weight : std::numeric_limits<double>::infinity();
  }

  /// Stores p iff it is strictly lighter. Throws InvalidInput when p does
  /// not have k parts.
  bool record(const Partition& p);

 private:
  int k_;
  std::optional<Partition> best_;
};

inline bool record(BestTracker& tracker, const Partition& p) { return tracker.record(p); }

struct ReductionOptions {
  std::uint64_t seed = 0;
  /// Cap on the r-vectors tried per reference partition. Unset: every vector
  /// when k <= 5, otherwise kSampledBranchVectors sampled ones.
  std::optional<std::uint64_t> max_branch_vectors;
  LaminarOptions laminar;
  /// Parts up to this size get the exact min-4-cut; larger ones the
  /// randomized one.
  Vertex min4_exact_max_vertices = default_oracle_max_vertices();
  std::uint64_t min4_max_trials = 200'000;
  bool memoize = true;
};

inline constexpr std::uint64_t kSampledBranchVectors = 4096;

struct ReductionStats {
  std::uint64_t main_calls = 0;
  std::uint64_t main_memo_hits = 0;
  std::uint64_t guess_calls = 0;
  std::uint64_t laminar_calls = 0;
  /// Laminar invocations that threw NotLaminar or hit a size guard.
  std::uint64_t laminar_skipped = 0;
  std::uint64_t branch_vectors = 0;
  bool sampled_branch_vectors = false;
  std::vector<std::string> warnings;
};

struct ReductionResult {
  Partition partition;
  /// Cost of each extension of the top-level reference partition: the
  /// mincut weight, or a third of the min-4-cut weight repeated three times.
  std::vector<double> c_values;
  /// Final top-level reference partition.
  Partition reference;
  ReductionStats stats;
};

/// Approximate minimum k-cut by the reference-partition reduction to the
/// laminar case, with guessing of optimal-part unions.
ReductionResult main_kcut_detailed(const WeightedGraph& g, int k, const EpsilonConfig& cfg,
                                   const ReductionOptions& options = {});

Partition main_kcut(const WeightedGraph& g, int k, const EpsilonConfig& cfg, std::uint64_t seed);

/// Records `parts`, then for every proper non-empty group J of parts and
/// every k' in [1, k-1] solves the union of J with k' parts and the rest
/// with k - k' parts; returns the lightest k-partition seen.
Partition guess(const WeightedGraph& g, int k, const Partition& parts, const EpsilonConfig& cfg,
                std::uint64_t seed);

}  // namespace kcut
