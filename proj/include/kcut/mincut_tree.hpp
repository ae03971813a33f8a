#pragma once

#include <iosfwd>
#include <vector>

#include "kcut/cut_primitives.hpp"
#include "kcut/graph.hpp"

namespace kcut {

using Node = int;

/// Rooted tree whose single-edge cuts, pulled back through phi, are exactly
/// the (1+epsilon)-mincuts of the graph it was built from.
class CutTree {
 public:
  CutTree(std::vector<Node> parent, std::vector<double> edge_weight, std::vector<Node> phi,
          Node root, double mincut, double epsilon);

  int num_nodes() const { return static_cast<int>(parent_.size()); }
  Vertex num_vertices() const { return static_cast<Vertex>(phi_.size()); }
  Node root() const { return root_; }
  /// parent(root) == root.
  Node parent(Node a) const { return parent_[a]; }
  /// w_T of the edge from a to its parent; 0 for the root.
  double edge_weight(Node a) const { return edge_weight_[a]; }
  Node phi(Vertex v) const { return phi_[v]; }
  const std::vector<Node>& phi() const { return phi_; }
  double mincut() const { return mincut_; }
  double epsilon() const { return epsilon_; }

  const std::vector<Node>& children(Node a) const { return children_[a]; }
  /// Vertices mapped to a itself.
  const VertexSet& hosted(Node a) const { return hosted_[a]; }
  /// True iff a is b or an ancestor of b.
  bool is_ancestor(Node a, Node b) const { return tin_[a] <= tin_[b] && tout_[b] <= tout_[a]; }
  /// Strict descendants of a.
  std::vector<Node> desc(Node a) const;
  /// Strict ancestors of a, nearest first.
  std::vector<Node> anc(Node a) const;
  /// a together with its descendants.
  std::vector<Node> subtree(Node a) const;
  /// phi^{-1}(subtree(a)).
  VertexSet vertices_under(Node a) const;
  /// Nodes in preorder from the root.
  const std::vector<Node>& preorder() const { return preorder_; }

  /// Same tree rooted at r; edge weights follow their edges.
  CutTree reroot(Node r) const;

 private:
  std::vector<Node> parent_;
  std::vector<double> edge_weight_;
  std::vector<Node> phi_;
  Node root_;
  double mincut_;
  double epsilon_;

  std::vector<std::vector<Node>> children_;
  std::vector<VertexSet> hosted_;
  std::vector<int> tin_;
  std::vector<int> tout_;
  std::vector<Node> preorder_;
};

/// Pairwise incomparable non-root nodes and their saved weight.
struct NodeSelection {
  std::vector<Node> nodes;
  double saved_value = 0.0;
};

/// Builds the tree from the near-mincut family. Node 0 is the root and hosts
/// vertex 0; every other node stands for one cut. Throws NotLaminar when two
/// near-mincuts cross.
CutTree build_mincut_tree(const WeightedGraph& g, double epsilon1,
                          const NearMincutOptions& options = {});

/// Cut induced by each non-root tree edge, canonicalized to avoid vertex 0 and
/// sorted by side.
std::vector<Cut> tree_cuts(const WeightedGraph& g, const CutTree& t);

/// Throws InvalidInput unless the nodes are distinct, non-root and pairwise
/// incomparable.
void check_selection(const CutTree& t, const std::vector<Node>& nodes);

/// Total weight of graph edges running between the subtrees of two different
/// selected nodes.
double saved(const WeightedGraph& g, const CutTree& t, const std::vector<Node>& nodes);

/// {phi^{-1}(subtree(a_i))} followed by the remaining vertices.
Partition partition_from_selection(const WeightedGraph& g, const CutTree& t,
                                   const std::vector<Node>& nodes);

/// Text dump: `t <id> <parent> <w>` per node, then `m <vertex> <node>`.
void write_tree(std::ostream& out, const CutTree& t);

}  // namespace kcut
