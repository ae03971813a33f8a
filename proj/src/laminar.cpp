#include "kcut/laminar.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "kcut/rng.hpp"

namespace kcut {

const SelectionTable* SubtreePvcCache::find(const std::vector<std::pair<Node, Node>>& key,
                                            int s_max) const {
  auto it = entries_.find({key, s_max});
  return it == entries_.end() ? nullptr : &it->second;
}

const SelectionTable& SubtreePvcCache::insert(std::vector<std::pair<Node, Node>> key, int s_max,
                                              SelectionTable table) {
  return entries_.insert_or_assign({std::move(key), s_max}, std::move(table)).first->second;
}

double anchor_epsilon(double epsilon1, double delta) { return (1.0 - delta) / 4.0 - 2.0 * epsilon1; }

Completion complete(const WeightedGraph& g, int k, std::vector<VertexSet> parts) {
  auto split = greedy_split(g, std::move(parts), k, TieBreak::first);
  return {std::move(split.partition), std::move(split.added_cuts)};
}

SelectionTable subtree_partial_vc(LaminarContext& ctx, const CutTree& t,
                                  const std::vector<Node>& a_set, int s_max) {
  std::vector<Node> nodes = a_set;
  std::sort(nodes.begin(), nodes.end());
  check_selection(t, nodes);

  std::vector<std::pair<Node, Node>> key;
  for (Node a : nodes) key.push_back({a, t.parent(a)});
  if (const auto* hit = ctx.cache.find(key, s_max)) return *hit;

  const auto m = static_cast<Vertex>(nodes.size());
  const auto& g = ctx.graph;
  std::vector<int> label(g.num_vertices(), -1);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Vertex i = 0; i < m; ++i) {
      if (t.is_ancestor(nodes[i], t.phi(v))) {
        label[v] = i;
        break;
      }
    }
  }
  std::vector<std::vector<double>> between(m, std::vector<double>(m, 0.0));
  for (const auto& e : g.edges()) {
    const int a = label[e.u];
    const int b = label[e.v];
    if (a >= 0 && b >= 0 && a != b) {
      between[a][b] += e.w;
      between[b][a] += e.w;
    }
  }
  const double capacity = (1.0 + ctx.epsilon1) * t.mincut();
  std::vector<Edge> edges;
  std::vector<double> vertex_weight(m, 0.0);
  for (Vertex i = 0; i < m; ++i) {
    double degree = 0.0;
    for (Vertex j = 0; j < m; ++j) {
      degree += between[i][j];
      if (j > i && between[i][j] > 0.0) edges.push_back({i, j, between[i][j]});
    }
    vertex_weight[i] = std::max(0.0, capacity - degree);
  }

  std::uint64_t stream = ctx.options.seed;
  for (const auto& [a, p] : key) {
    stream = splitmix64(stream ^ (static_cast<std::uint64_t>(a) << 32 | static_cast<std::uint32_t>(p)));
  }

  SelectionTable table(s_max + 1);
  if (m > 0) {
    const WeightedGraph aux(m, std::move(edges), std::move(vertex_weight));
    for (int s = 1; s <= std::min<int>(s_max, m); ++s) {
      const PvcInstance inst{aux, s, ctx.delta};
      const auto sol = ctx.delta > 0.0
                           ? pvc_general(inst, derive_seed(stream, static_cast<std::uint64_t>(s)),
                                         ctx.options.pvc)
                           : pvc_bruteforce(inst, ctx.options.pvc.brute_force_budget);
      NodeSelection sel;
      for (Vertex x : sol.chosen) sel.nodes.push_back(nodes[x]);
      for (std::size_t i = 0; i < sol.chosen.size(); ++i) {
        for (std::size_t j = i + 1; j < sol.chosen.size(); ++j) {
          sel.saved_value += between[sol.chosen[i]][sol.chosen[j]];
        }
      }
      table[s] = std::move(sel);
    }
  }
  return ctx.cache.insert(std::move(key), s_max, std::move(table));
}

namespace {

// Leaf to root: deeper nodes first, then by id.
std::vector<Node> bottom_up_order(const CutTree& t) {
  std::vector<int> depth(t.num_nodes(), 0);
  for (Node a : t.preorder()) {
    if (a != t.root()) depth[a] = depth[t.parent(a)] + 1;
  }
  std::vector<Node> order(t.num_nodes());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Node a, Node b) { return depth[a] > depth[b]; });
  return order;
}

bool comparable(const CutTree& t, Node a, Node b) {
  return t.is_ancestor(a, b) || t.is_ancestor(b, a);
}

// Keeps the cheapest completion and the selection with the most saved weight.
class Recorder {
 public:
  Recorder(const LaminarContext& ctx, const CutTree& t) : ctx_(ctx), t_(t) {}

  void consider(const NodeSelection& sel, const char* which) {
    if (sel.nodes.empty()) return;
    if (static_cast<int>(sel.nodes.size()) > ctx_.k - 1) {
      throw Error("laminar selection holds more than k-1 nodes");
    }
    if (out_.best_case.empty() || sel.saved_value > out_.best_selection.saved_value + kWeightTolerance) {
      out_.best_selection = sel;
      out_.selection_root = t_.root();
      out_.best_case = which;
    }
    const auto& g = ctx_.graph;
    std::vector<char> used(g.num_vertices(), 0);
    std::vector<VertexSet> parts;
    for (Node a : sel.nodes) {
      parts.push_back(t_.vertices_under(a));
      for (Vertex v : parts.back()) used[v] = 1;
    }
    VertexSet rest;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (!used[v]) rest.push_back(v);
    }
    if (!rest.empty()) parts.push_back(std::move(rest));
    auto done = complete(g, ctx_.k, std::move(parts));
    if (!out_.best_partition || done.partition.cut_weight < out_.best_partition->cut_weight - kWeightTolerance) {
      out_.best_partition = std::move(done.partition);
    }
  }

  void merge(RootedOutcome other) {
    if (other.best_partition &&
        (!out_.best_partition ||
         other.best_partition->cut_weight < out_.best_partition->cut_weight - kWeightTolerance)) {
      out_.best_partition = std::move(other.best_partition);
    }
    if (!other.best_case.empty() &&
        (out_.best_case.empty() ||
         other.best_selection.saved_value > out_.best_selection.saved_value + kWeightTolerance)) {
      out_.best_selection = std::move(other.best_selection);
      out_.selection_root = other.selection_root;
      out_.best_case = std::move(other.best_case);
    }
  }

  RootedOutcome take() { return std::move(out_); }

 private:
  const LaminarContext& ctx_;
  const CutTree& t_;
  RootedOutcome out_;
};

}  // namespace

std::vector<AnchorRecord> find_near_anchors(LaminarContext& ctx, const CutTree& t, double eps3) {
  const double mc = t.mincut();
  std::vector<AnchorRecord> out;
  for (Node a : bottom_up_order(t)) {
    const auto& kids = t.children(a);
    const int s_max = std::min<int>(static_cast<int>(kids.size()), ctx.k - 1);
    if (s_max < 2) continue;
    const auto table = subtree_partial_vc(ctx, t, kids, s_max);
    std::optional<AnchorRecord> mark;
    for (int s = 2; s <= s_max; ++s) {
      const auto& sel = table[s];
      if (!sel) continue;
      const double bar = eps3 * (s - 1) * mc - ctx.delta * (1.0 + ctx.epsilon1) * s * mc;
      if (sel->saved_value >= bar - kWeightTolerance) mark = AnchorRecord{a, s, sel->nodes, sel->saved_value};
    }
    if (mark) out.push_back(std::move(*mark));
  }
  return out;
}

std::vector<AnchorRecord> minimal_anchors(const CutTree& t, const std::vector<AnchorRecord>& anchors) {
  std::vector<AnchorRecord> out;
  for (const auto& a : anchors) {
    const bool below = std::any_of(anchors.begin(), anchors.end(), [&](const AnchorRecord& b) {
      return b.node != a.node && t.is_ancestor(a.node, b.node);
    });
    if (!below) out.push_back(a);
  }
  return out;
}

std::vector<std::size_t> knapsack_greedy(const std::vector<KnapsackItem>& items, int capacity) {
  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return items[a].size > items[b].size; });
  std::vector<std::size_t> chosen;
  int used = 0;
  for (std::size_t i : order) {
    if (used + items[i].size <= capacity) {
      used += items[i].size;
      chosen.push_back(i);
    }
  }
  return chosen;
}

NodeSelection many_anchors_solve(const WeightedGraph& g, const CutTree& t,
                                 const std::vector<AnchorRecord>& anchors, int k) {
  std::vector<KnapsackItem> items;
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    items.push_back({anchors[i].s, anchors[i].s - 1, i});
  }
  NodeSelection sel;
  for (std::size_t i : knapsack_greedy(items, k - 1)) {
    const auto& kids = anchors[items[i].origin].children_choice;
    sel.nodes.insert(sel.nodes.end(), kids.begin(), kids.end());
  }
  sel.saved_value = saved(g, t, sel.nodes);
  return sel;
}

std::vector<Branch> branches(const CutTree& t, const std::vector<AnchorRecord>& anchors) {
  std::vector<char> in_tree(t.num_nodes(), 0);
  for (const auto& a : anchors) {
    for (Node x = a.node; !in_tree[x]; x = t.parent(x)) {
      in_tree[x] = 1;
      if (x == t.root()) break;
    }
  }
  std::vector<int> inner_children(t.num_nodes(), 0);
  for (Node x = 0; x < t.num_nodes(); ++x) {
    if (in_tree[x] && x != t.root()) ++inner_children[t.parent(x)];
  }
  std::vector<Branch> out;
  for (Node b : t.preorder()) {
    if (!in_tree[b] || inner_children[b] == 1) continue;
    Branch branch{{b}};
    for (Node x = b; x != t.root() && inner_children[t.parent(x)] == 1;) {
      x = t.parent(x);
      branch.nodes.push_back(x);
    }
    std::reverse(branch.nodes.begin(), branch.nodes.end());
    out.push_back(std::move(branch));
  }
  return out;
}

std::vector<Node> children_outside(const CutTree& t, const std::vector<Node>& x) {
  std::vector<Node> out;
  for (Node a : x) {
    for (Node c : t.children(a)) {
      if (std::find(x.begin(), x.end(), c) == x.end()) out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SelectionTable single_branch(LaminarContext& ctx, const CutTree& t, const Branch& b, int s_max) {
  SelectionTable best(s_max + 1);
  for (std::size_t i = 0; i < b.nodes.size(); ++i) {
    const std::vector<Node> upper(b.nodes.begin(), b.nodes.begin() + static_cast<long>(i) + 1);
    const auto table = subtree_partial_vc(ctx, t, children_outside(t, upper), s_max);
    for (int s = 1; s <= s_max; ++s) {
      if (table[s] && (!best[s] || table[s]->saved_value > best[s]->saved_value + kWeightTolerance)) {
        best[s] = table[s];
      }
    }
  }
  return best;
}

RootedOutcome few_anchors_solve(LaminarContext& ctx, const CutTree& t,
                                const std::vector<Branch>& branch_set) {
  const int budget = ctx.k - 1;
  const auto nb = branch_set.size();
  if (nb > 20) throw SizeGuardExceeded("too many branches for subset enumeration");
  Recorder rec(ctx, t);

  std::vector<SelectionTable> per_branch;
  for (const auto& b : branch_set) per_branch.push_back(single_branch(ctx, t, b, budget));

  for (std::uint32_t mask = 1; mask < (1U << nb); ++mask) {
    std::vector<std::size_t> chosen;
    bool ok = true;
    for (std::size_t i = 0; i < nb && ok; ++i) {
      if (!((mask >> i) & 1U)) continue;
      for (std::size_t j : chosen) ok = ok && !comparable(t, branch_set[i].top(), branch_set[j].top());
      chosen.push_back(i);
    }
    if (!ok) continue;

    // Case B1: every chosen branch contributes i_B >= 1 of its own nodes.
    // dp[j] = best summed saved with j nodes; pick[c][j] = i_B used for branch c.
    constexpr double kNone = -1.0;
    std::vector<double> dp(budget + 1, kNone);
    dp[0] = 0.0;
    std::vector<std::vector<int>> pick(chosen.size(), std::vector<int>(budget + 1, 0));
    for (std::size_t c = 0; c < chosen.size(); ++c) {
      const auto& table = per_branch[chosen[c]];
      std::vector<double> next(budget + 1, kNone);
      for (int j = 0; j <= budget; ++j) {
        if (dp[j] < 0.0) continue;
        for (int i = 1; j + i <= budget; ++i) {
          if (!table[i]) continue;
          const double v = dp[j] + table[i]->saved_value;
          if (v > next[j + i]) {
            next[j + i] = v;
            pick[c][j + i] = i;
          }
        }
      }
      dp = std::move(next);
    }
    for (int total = 1; total <= budget; ++total) {
      if (dp[total] < 0.0) continue;
      NodeSelection sel;
      int j = total;
      for (std::size_t c = chosen.size(); c-- > 0;) {
        const int i = pick[c][j];
        const auto& nodes = per_branch[chosen[c]][i]->nodes;
        sel.nodes.insert(sel.nodes.end(), nodes.begin(), nodes.end());
        j -= i;
      }
      sel.saved_value = saved(ctx.graph, t, sel.nodes);
      rec.consider(sel, "B1");
    }

    // Case B2: each chosen branch collapses to its top, so candidates hang
    // off the strict ancestors of the tops.
    std::vector<Node> upper;
    for (std::size_t i : chosen) {
      for (Node a : t.anc(branch_set[i].top())) upper.push_back(a);
    }
    std::sort(upper.begin(), upper.end());
    upper.erase(std::unique(upper.begin(), upper.end()), upper.end());
    const auto table = subtree_partial_vc(ctx, t, children_outside(t, upper), budget);
    for (int s = 1; s <= budget; ++s) {
      if (table[s]) rec.consider(*table[s], "B2");
    }
  }
  return rec.take();
}

RootedOutcome laminar_rooted(LaminarContext& ctx, const CutTree& t) {
  const auto anchors = minimal_anchors(t, find_near_anchors(ctx, t, anchor_epsilon(ctx.epsilon1, ctx.delta)));
  if (static_cast<int>(anchors.size()) >= ctx.k - 1) {
    Recorder rec(ctx, t);
    rec.consider(many_anchors_solve(ctx.graph, t, anchors, ctx.k), "K");
    return rec.take();
  }
  return few_anchors_solve(ctx, t, branches(t, anchors));
}

LaminarResult laminar_detailed(const WeightedGraph& g, int k, double epsilon1, double delta,
                               const LaminarOptions& options) {
  const Vertex n = g.num_vertices();
  if (k < 1 || k > n) {
    throw InvalidInput("laminar needs 1 <= k <= |V|, got k=" + std::to_string(k));
  }
  if (k == 1) return {make_partition(g, {all_vertices(n)}), {}, -1, true};

  const CutTree tree = build_mincut_tree(g, epsilon1, options.near_mincuts);
  if (k <= options.exact_max_k) {
    return {exact_kcut_oracle(g, k, options.oracle_max_vertices), {}, -1, true};
  }

  LaminarContext ctx{g, epsilon1, delta, k, options, {}};
  Recorder all(ctx, tree);
  for (Node r = 0; r < tree.num_nodes(); ++r) all.merge(laminar_rooted(ctx, tree.reroot(r)));
  auto out = all.take();
  if (!out.best_partition) out.best_partition = complete(g, k, {all_vertices(n)}).partition;
  return {std::move(*out.best_partition), std::move(out.best_selection), out.selection_root, false};
}

Partition laminar(const WeightedGraph& g, int k, double epsilon1, double delta,
                  const LaminarOptions& options) {
  return laminar_detailed(g, k, epsilon1, delta, options).partition;
}

}  // namespace kcut
