#pragma once

// Small hand-built graphs and brute-force reference routines used across the
// unit tests. Nothing here calls into the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "kcut/graph.hpp"
#include "kcut/mincut_tree.hpp"

namespace fixtures {

using kcut::Edge;
using kcut::Vertex;
using kcut::VertexSet;
using kcut::WeightedGraph;

inline WeightedGraph triangle() { return WeightedGraph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}); }

inline WeightedGraph path(Vertex n, double w = 1.0) {
  std::vector<Edge> es;
  for (Vertex i = 0; i + 1 < n; ++i) es.push_back({i, i + 1, w});
  return WeightedGraph(n, es);
}

inline WeightedGraph cycle(Vertex n) {
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) es.push_back({i, (i + 1) % n, 1.0});
  return WeightedGraph(n, es);
}

inline WeightedGraph complete(Vertex n, double w = 1.0) {
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) es.push_back({i, j, w});
  return WeightedGraph(n, es);
}

/// Star with center 0 and leaves 1..leaves.
inline WeightedGraph star(Vertex leaves) {
  std::vector<Edge> es;
  for (Vertex i = 1; i <= leaves; ++i) es.push_back({0, i, 1.0});
  return WeightedGraph(leaves + 1, es);
}

/// c=0, x=1, y=2, z=3 with (c,x,1),(c,y,1),(c,z,1),(x,y,0.2).
inline WeightedGraph g_star() {
  return WeightedGraph(4, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}, {1, 2, 0.2}});
}

/// Two cliques sharing vertex k-1: K_k with unit weights on 0..k-1 and
/// K_{k^2} with weight 1/(k+1) on k-1..k+k^2-2.
inline WeightedGraph two_clique(int k) {
  const Vertex n = k + k * k - 1;
  std::vector<Edge> es;
  for (Vertex i = 0; i < k; ++i)
    for (Vertex j = i + 1; j < k; ++j) es.push_back({i, j, 1.0});
  for (Vertex i = k - 1; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) es.push_back({i, j, 1.0 / (k + 1)});
  return WeightedGraph(n, es);
}

/// Erdos-Renyi graph with integer weights in [lo, hi].
inline WeightedGraph random_graph(std::mt19937_64& rng, Vertex n, double p, int lo = 1,
                                  int hi = 10) {
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<int> weight(lo, hi);
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng)) es.push_back({i, j, static_cast<double>(weight(rng))});
  return WeightedGraph(n, es);
}

inline double crossing_weight(const WeightedGraph& g, const std::vector<int>& label) {
  double w = 0.0;
  for (const auto& e : g.edges())
    if (label[e.u] != label[e.v]) w += e.w;
  return w;
}

/// A minimum k-cut labeling found by trying all k^n labelings that use every
/// label.
inline std::vector<int> brute_kcut_labels(const WeightedGraph& g, int k) {
  const Vertex n = g.num_vertices();
  std::vector<int> label(n, 0), best_label;
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    std::vector<char> used(k, 0);
    for (int l : label) used[l] = 1;
    if (std::all_of(used.begin(), used.end(), [](char c) { return c != 0; })) {
      const double w = crossing_weight(g, label);
      if (w < best) {
        best = w;
        best_label = label;
      }
    }
    Vertex i = 0;
    while (i < n && label[i] == k - 1) label[i++] = 0;
    if (i == n) break;
    ++label[i];
  }
  return best_label;
}

inline double brute_kcut(const WeightedGraph& g, int k) {
  return crossing_weight(g, brute_kcut_labels(g, k));
}

/// Every side S with 0 not in S and S nonempty, as a bitmask over n <= 20.
inline std::vector<std::pair<std::uint32_t, double>> all_cuts(const WeightedGraph& g) {
  const Vertex n = g.num_vertices();
  std::vector<std::pair<std::uint32_t, double>> out;
  for (std::uint32_t mask = 2; mask < (1U << n); mask += 2) {
    double w = 0.0;
    for (const auto& e : g.edges())
      if (((mask >> e.u) & 1U) != ((mask >> e.v) & 1U)) w += e.w;
    out.push_back({mask, w});
  }
  return out;
}

inline VertexSet mask_to_set(std::uint32_t mask) {
  VertexSet s;
  for (Vertex v = 0; v < 32; ++v)
    if ((mask >> v) & 1U) s.push_back(v);
  return s;
}

/// w(E_S) + w(S) minimized over all k-subsets, by direct enumeration.
inline double brute_pvc(const WeightedGraph& g, int k) {
  const Vertex n = g.num_vertices();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    double w = 0.0;
    for (Vertex v = 0; v < n; ++v)
      if ((mask >> v) & 1U) w += g.vertex_weight(v);
    for (const auto& e : g.edges())
      if (((mask >> e.u) | (mask >> e.v)) & 1U) w += e.w;
    best = std::min(best, w);
  }
  return best;
}

// Largest saved weight over all antichains of exactly `size` non-root nodes,
// over every root. Brute force over node subsets.
inline double best_saved_antichain(const WeightedGraph& g, const kcut::CutTree& tree, int size) {
  const int nodes = tree.num_nodes();
  double best = 0.0;
  for (kcut::Node r = 0; r < nodes; ++r) {
    const auto t = tree.reroot(r);
    std::vector<VertexSet> under(nodes);
    for (kcut::Node a = 0; a < nodes; ++a) under[a] = t.vertices_under(a);
    for (std::uint32_t mask = 0; mask < (1U << nodes); ++mask) {
      if (__builtin_popcount(mask) != size || ((mask >> r) & 1U)) continue;
      std::vector<kcut::Node> pick;
      for (kcut::Node a = 0; a < nodes; ++a)
        if ((mask >> a) & 1U) pick.push_back(a);
      bool ok = true;
      for (std::size_t i = 0; i < pick.size() && ok; ++i)
        for (std::size_t j = i + 1; j < pick.size() && ok; ++j)
          ok = !kcut::set_intersection(under[pick[i]], under[pick[j]]).size();
      if (!ok) continue;
      std::vector<int> label(g.num_vertices(), -1);
      for (std::size_t i = 0; i < pick.size(); ++i)
        for (Vertex v : under[pick[i]]) label[v] = static_cast<int>(i);
      double s = 0.0;
      for (const auto& e : g.edges())
        if (label[e.u] >= 0 && label[e.v] >= 0 && label[e.u] != label[e.v]) s += e.w;
      best = std::max(best, s);
    }
  }
  return best;
}

}  // namespace fixtures
