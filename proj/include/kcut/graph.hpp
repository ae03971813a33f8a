#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kcut {

using Vertex = std::int32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Absolute tolerance used for every weight comparison in the library.
inline constexpr double kWeightTolerance = 1e-9;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: bad partitions, out-of-range k, negative weights.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The (1+eps)-near-mincut family of a graph contains a crossing pair.
class NotLaminar : public Error {
 public:
  using Error::Error;
};

/// An exhaustive routine was asked to run beyond its configured budget.
class SizeGuardExceeded : public Error {
 public:
  using Error::Error;
};

struct Edge {
  Vertex u;
  Vertex v;
  double w;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  Vertex to;
  double w;
};

/// Undirected simple graph with non-negative edge and vertex weights.
///
/// Vertices are the dense ids 0..n-1. Construction merges parallel edges by
/// summing their weights and drops self-loops, so every instance is simple
/// and its edge list is in canonical (u < v, lexicographic) order. Instances
/// are immutable.
class WeightedGraph {
 public:
  WeightedGraph(Vertex num_vertices, std::vector<Edge> edges,
                std::vector<double> vertex_weights = {});

  Vertex num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Neighbor> neighbors(Vertex v) const;

  double vertex_weight(Vertex v) const { return vertex_weights_[v]; }
  const std::vector<double>& vertex_weights() const { return vertex_weights_; }
  bool has_vertex_weights() const;

  /// Sum of the weights of edges incident to v.
  double weighted_degree(Vertex v) const { return degree_[v]; }
  double total_edge_weight() const { return total_edge_weight_; }

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b);

 private:
  Vertex n_;
  std::vector<Edge> edges_;
  std::vector<double> vertex_weights_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
  std::vector<double> degree_;
  double total_edge_weight_ = 0.0;
};

/// A k-partition of V together with the weight of the edges it cuts.
struct Partition {
  std::vector<VertexSet> parts;
  double cut_weight = 0.0;

  std::size_t size() const { return parts.size(); }
};

/// A 2-cut (S, V \ S); `side` is S.
struct Cut {
  VertexSet side;
  double weight = 0.0;
};

/// Validates that `parts` partition V into non-empty sets (each part is
/// sorted on the way in) and attaches the crossing weight. Part order is kept.
Partition make_partition(const WeightedGraph& g, std::vector<VertexSet> parts);

/// Parts sorted by their smallest member.
Partition canonical(Partition p);

/// label[v] = index of the part holding v.
std::vector<int> part_labels(const Partition& p, Vertex num_vertices);

double cut_weight(const WeightedGraph& g, const Partition& p);
double cut_weight(const WeightedGraph& g, const std::vector<VertexSet>& parts);

/// w(boundary of s); rejects s empty or s == V.
double boundary_weight(const WeightedGraph& g, const VertexSet& s);

Cut make_cut(const WeightedGraph& g, VertexSet side);

struct InducedSubgraph {
  WeightedGraph graph;
  /// vertices[i] is the id in the parent graph of local vertex i.
  VertexSet vertices;
};

/// G[s], relabelled densely in increasing order of parent id.
InducedSubgraph induced_subgraph(const WeightedGraph& g, const VertexSet& s);

struct Contraction {
  WeightedGraph graph;
  /// members[x] lists the parent vertices merged into contracted vertex x.
  std::vector<VertexSet> members;
};

/// Contracts every group into one vertex. Groups come first (in the given
/// order), followed by the untouched vertices in increasing id order.
Contraction contract(const WeightedGraph& g, const std::vector<VertexSet>& groups);

/// Maps contracted vertices back to the union of their members.
VertexSet expand(const Contraction& c, const VertexSet& contracted);

/// True iff A\B, B\A, A∩B and V\(A∪B) are all non-empty.
bool crosses(const Cut& a, const Cut& b, Vertex num_vertices);

// Small sorted-set helpers shared across modules.
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);
VertexSet complement(const VertexSet& s, Vertex num_vertices);
VertexSet all_vertices(Vertex num_vertices);

}  // namespace kcut
