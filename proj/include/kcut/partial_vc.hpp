#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kcut/graph.hpp"

namespace kcut {

/// Minimum Partial Vertex Cover: choose exactly k vertices S minimizing
/// w(E_S) + w(S), where E_S are the edges with at least one endpoint in S.
struct PvcInstance {
  WeightedGraph graph;
  int k = 1;
  double delta = 0.1;
};

struct PvcSolution {
  VertexSet chosen;
  double value = 0.0;
};

/// Key of a red component in the color-coding dynamic program.
struct ComponentType {
  int size = 0;
  std::int64_t cost = 0;
  int count = 0;
};

struct PvcOptions {
  /// Cap on random colorings per bounded solve. When 2^n colorings fit under
  /// the cap the solver enumerates every coloring instead.
  std::uint64_t max_trials = std::uint64_t{1} << 16;
  /// Multiplier inside the log factor of the trial count.
  double trials_safety = 4.0;
  std::uint64_t brute_force_budget = 10'000'000;
};

/// w(E_S) + w(S).
double pvc_objective(const WeightedGraph& g, const VertexSet& s);

/// Checks k in [1, |V|] and delta in (0, 1).
void validate(const PvcInstance& instance);

/// Exact optimum by enumerating all C(n, k) subsets (lexicographically first
/// optimum on ties).
PvcSolution pvc_bruteforce(const PvcInstance& instance,
                           std::uint64_t budget = PvcOptions{}.brute_force_budget);

/// One color-coding round for a fixed coloring (`red[v] != 0` marks red).
/// Returns the cheapest union of red components with exactly k vertices, or
/// nullopt when no such union exists. Components larger than k or costlier
/// than tau are discarded; tau is inclusive.
std::optional<PvcSolution> color_coding_trial(const WeightedGraph& g, int k, double tau,
                                              std::span<const char> red);

/// Same, with a uniformly random coloring drawn from `seed`.
std::optional<PvcSolution> color_coding_trial(const WeightedGraph& g, int k, double tau,
                                              std::uint64_t seed);

/// Histogram of component types for a coloring, counts capped at k.
std::vector<ComponentType> component_types(const WeightedGraph& g, int k, double tau,
                                           std::span<const char> red);

/// (1+delta)-approximation for integer edge weights in {1..M} and no vertex
/// weights: the better of the k least-weighted-degree vertices and the best
/// color-coding round. Vertices in `always_blue` are never colored red; the
/// general reduction passes its two sentinels here since no useful solution
/// contains them.
PvcSolution pvc_bounded(const WeightedGraph& g, int k, double delta, std::uint64_t seed,
                        const PvcOptions& options = {},
                        std::span<const Vertex> always_blue = {});

/// Bounded-weight instance built around a guessed heaviest vertex.
struct BoundedReduction {
  WeightedGraph graph;
  /// original[x] is the vertex of G behind H-vertex x, or -1 for p and q.
  std::vector<Vertex> original;
  Vertex p = -1;
  Vertex q = -1;
  double threshold = 0.0;  ///< L, the extended weighted degree of the guess
  double unit = 0.0;       ///< rounding granularity L * delta'^2 / k^2
};

/// Extended weighted degree: vertex weight plus incident edge weight.
double extended_weighted_degree(const WeightedGraph& g, Vertex v);

/// Builds H for the guess `heaviest`; nullopt when fewer than k vertices
/// survive or L = 0.
std::optional<BoundedReduction> bounded_reduction(const WeightedGraph& g, int k,
                                                  double delta_prime, Vertex heaviest);

/// (1+delta)-approximation for general non-negative edge and vertex weights,
/// correct with high probability. Uses delta' = delta / 4 internally.
PvcSolution pvc_general(const PvcInstance& instance, std::uint64_t seed,
                        const PvcOptions& options = {});

}  // namespace kcut
