#pragma once

#include <cstdint>

#include "kcut/graph.hpp"

namespace kcut {

/// K_k with unit weights and K_{k^2} with weights 1/(k+1), sharing vertex
/// k-1. Vertices 0..k-1 form the small clique.
WeightedGraph gen_two_clique(int k);

struct PlantedInstance {
  WeightedGraph graph;
  /// Blobs first, the core (holding vertex 0) last.
  Partition planted;
  /// Target mincut; global_mincut(graph) equals it.
  double mincut = 1.0;
};

/// k-1 dense blobs of n_per_part vertices around a dense core of the same
/// size. Every blob boundary lies in [c, (1+eps1)c] with c = 1, some blob
/// pairs are joined so that their union is also a near-mincut, and a few
/// light edges run between other blobs. The result is checked to have a
/// laminar (1+eps1)-mincut family and mincut c; failing seeds are retried
/// with derived seeds.
PlantedInstance gen_planted_laminar(int k, int n_per_part, double eps1, std::uint64_t seed);

/// G(n, p) with integer weights drawn uniformly from [w_min, w_max]. With
/// vertex_w_max > 0, every vertex also gets an integer weight in
/// [0, vertex_w_max], drawn after the edges.
WeightedGraph gen_random_gnp(Vertex n, double p, int w_min, int w_max, std::uint64_t seed,
                             int vertex_w_max = 0);

/// Star K_{1,leaves} with integer edge weights in [1, 5] and vertex weights
/// in {0, 1, 2} on the leaves.
WeightedGraph gen_star_pvc(Vertex leaves, std::uint64_t seed);

}  // namespace kcut
