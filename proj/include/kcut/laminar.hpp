#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kcut/cut_primitives.hpp"
#include "kcut/mincut_tree.hpp"
#include "kcut/partial_vc.hpp"

namespace kcut {

/// A node with s children whose saved weight clears the near-anchor bar.
struct AnchorRecord {
  Node node = -1;
  int s = 0;
  std::vector<Node> children_choice;
  double saved_value = 0.0;
};

/// Chain of tree nodes, listed top first; `top()` is the ancestor of the rest.
struct Branch {
  std::vector<Node> nodes;

  Node top() const { return nodes.front(); }
};

struct KnapsackItem {
  int size = 0;
  int value = 0;
  /// Index of the anchor this item stands for.
  std::size_t origin = 0;
};

struct LaminarOptions {
  std::uint64_t seed = 0;
  PvcOptions pvc;
  NearMincutOptions near_mincuts;
  /// Targets up to this k are solved by the exact oracle.
  int exact_max_k = 4;
  Vertex oracle_max_vertices = default_oracle_max_vertices();
};

/// Per-s selections, index s in [0, s_max]; entry 0 is unused.
using SelectionTable = std::vector<std::optional<NodeSelection>>;

/// Memo for subtree_partial_vc across the roots of one tree. The key is the
/// set of (node, parent) edges, which fixes every subtree regardless of root.
class SubtreePvcCache {
 public:
  const SelectionTable* find(const std::vector<std::pair<Node, Node>>& key, int s_max) const;
  const SelectionTable& insert(std::vector<std::pair<Node, Node>> key, int s_max,
                               SelectionTable table);

 private:
  std::map<std::pair<std::vector<std::pair<Node, Node>>, int>, SelectionTable> entries_;
};

/// Context shared by the laminar subroutines for one (graph, tree) pair.
struct LaminarContext {
  const WeightedGraph& graph;
  double epsilon1;
  double delta;
  int k;
  LaminarOptions options;
  SubtreePvcCache cache;
};

/// Best selection of s nodes out of `a_set` for every s <= s_max, through
/// Partial VC on the graph with one vertex x_b per node, edge weights
/// saved(b1, b2) and vertex weights (1+eps1) mincut - w(boundary x_b).
/// Entry s is empty when |a_set| < s. delta <= 0 solves each instance exactly.
SelectionTable subtree_partial_vc(LaminarContext& ctx, const CutTree& t,
                                  const std::vector<Node>& a_set, int s_max);

/// Nodes whose best s-children selection for some s in [2, min(children, k-1)]
/// has saved >= eps3 (s-1) mincut - delta (1+eps1) s mincut, with the largest
/// such s. Listed leaf to root (depth descending, then node id).
std::vector<AnchorRecord> find_near_anchors(LaminarContext& ctx, const CutTree& t, double eps3);

/// Anchors with no anchor strictly below them, in the same order.
std::vector<AnchorRecord> minimal_anchors(const CutTree& t, const std::vector<AnchorRecord>& anchors);

/// Indices of the items picked by largest-first greedy under `capacity`.
std::vector<std::size_t> knapsack_greedy(const std::vector<KnapsackItem>& items, int capacity);

/// Knapsack over the anchors' sizes; the union of the chosen children.
NodeSelection many_anchors_solve(const WeightedGraph& g, const CutTree& t,
                                 const std::vector<AnchorRecord>& anchors, int k);

/// Splits the union of root-to-anchor paths at every node whose number of
/// children inside that union is not one; each such node takes the chain of
/// single-child ancestors above it.
std::vector<Branch> branches(const CutTree& t, const std::vector<AnchorRecord>& anchors);

/// children(X) \ X for a set of nodes X.
std::vector<Node> children_outside(const CutTree& t, const std::vector<Node>& x);

/// Best per-s selection over every candidate minimal anchor a in the branch,
/// drawing from children(({a} + anc(a)) & b).
SelectionTable single_branch(LaminarContext& ctx, const CutTree& t, const Branch& b, int s_max);

/// Candidate selections of one rooted tree, with their completions.
struct RootedOutcome {
  std::optional<Partition> best_partition;
  NodeSelection best_selection;
  /// Root under which best_selection's subtrees are read.
  Node selection_root = -1;
  /// Which case produced the largest saved weight: "K", "B1", "B2" or "".
  std::string best_case;
};

/// Cases B1 and B2 over the branches; every candidate is completed to k parts.
RootedOutcome few_anchors_solve(LaminarContext& ctx, const CutTree& t,
                                const std::vector<Branch>& branch_set);

/// One root of the laminar algorithm (k >= 5 path).
RootedOutcome laminar_rooted(LaminarContext& ctx, const CutTree& t);

struct LaminarResult {
  Partition partition;
  /// Selection with the largest saved weight over all roots; empty on the
  /// exact small-k path.
  NodeSelection best_selection;
  Node selection_root = -1;
  bool exact = false;
};

/// Approximate minimum k-cut for graphs whose (1+eps1)-mincuts are laminar.
/// Throws NotLaminar otherwise.
LaminarResult laminar_detailed(const WeightedGraph& g, int k, double epsilon1, double delta,
                               const LaminarOptions& options = {});

Partition laminar(const WeightedGraph& g, int k, double epsilon1, double delta,
                  const LaminarOptions& options = {});

struct Completion {
  Partition partition;
  std::vector<double> added_cuts;
};

/// Splits the part with the cheapest induced mincut until k parts exist.
Completion complete(const WeightedGraph& g, int k, std::vector<VertexSet> parts);

/// Anchor threshold (1 - delta)/4 - 2 eps1.
double anchor_epsilon(double epsilon1, double delta);

}  // namespace kcut
