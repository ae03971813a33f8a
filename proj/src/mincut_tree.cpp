#include "kcut/mincut_tree.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <string>

namespace kcut {

CutTree::CutTree(std::vector<Node> parent, std::vector<double> edge_weight, std::vector<Node> phi,
                 Node root, double mincut, double epsilon)
    : parent_(std::move(parent)),
      edge_weight_(std::move(edge_weight)),
      phi_(std::move(phi)),
      root_(root),
      mincut_(mincut),
      epsilon_(epsilon) {
  const int nodes = num_nodes();
  if (nodes == 0 || root_ < 0 || root_ >= nodes || parent_[root_] != root_ ||
      edge_weight_.size() != parent_.size()) {
    throw InvalidInput("malformed cut tree");
  }
  children_.assign(nodes, {});
  hosted_.assign(nodes, {});
  for (Node a = 0; a < nodes; ++a) {
    if (a != root_) children_[parent_[a]].push_back(a);
  }
  for (Vertex v = 0; v < num_vertices(); ++v) hosted_[phi_[v]].push_back(v);

  tin_.assign(nodes, -1);
  tout_.assign(nodes, -1);
  int clock = 0;
  std::vector<std::pair<Node, std::size_t>> stack{{root_, 0}};
  tin_[root_] = clock++;
  preorder_.push_back(root_);
  while (!stack.empty()) {
    auto& [a, next] = stack.back();
    if (next < children_[a].size()) {
      const Node c = children_[a][next++];
      tin_[c] = clock++;
      preorder_.push_back(c);
      stack.push_back({c, 0});
    } else {
      tout_[a] = clock++;
      stack.pop_back();
    }
  }
  if (static_cast<int>(preorder_.size()) != nodes) throw InvalidInput("cut tree parent links form a cycle");
}

std::vector<Node> CutTree::desc(Node a) const {
  auto out = subtree(a);
  out.erase(out.begin());
  return out;
}

std::vector<Node> CutTree::anc(Node a) const {
  std::vector<Node> out;
  while (a != root_) {
    a = parent_[a];
    out.push_back(a);
  }
  return out;
}

std::vector<Node> CutTree::subtree(Node a) const {
  std::vector<Node> out;
  std::vector<Node> stack{a};
  while (!stack.empty()) {
    const Node x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (auto it = children_[x].rbegin(); it != children_[x].rend(); ++it) stack.push_back(*it);
  }
  return out;
}

VertexSet CutTree::vertices_under(Node a) const {
  VertexSet out;
  for (Vertex v = 0; v < num_vertices(); ++v) {
    if (is_ancestor(a, phi_[v])) out.push_back(v);
  }
  return out;
}

CutTree CutTree::reroot(Node r) const {
  auto parent = parent_;
  auto weight = edge_weight_;
  // Flip the path r -> root so that each edge keeps its weight.
  Node child = r;
  Node up = parent_[r];
  double carried = edge_weight_[r];
  parent[r] = r;
  weight[r] = 0.0;
  while (child != root_) {
    const Node next_up = parent_[up];
    const double next_carried = edge_weight_[up];
    parent[up] = child;
    weight[up] = carried;
    child = up;
    up = next_up;
    carried = next_carried;
  }
  return CutTree(std::move(parent), std::move(weight), phi_, r, mincut_, epsilon_);
}

CutTree build_mincut_tree(const WeightedGraph& g, double epsilon1, const NearMincutOptions& options) {
  if (epsilon1 < 0.0) throw InvalidInput("epsilon1 must be non-negative");
  const Vertex n = g.num_vertices();
  if (n == 1) return CutTree({0}, {0.0}, {0}, 0, 0.0, epsilon1);

  auto family = enumerate_near_mincuts(g, epsilon1, options);
  auto& cuts = family.cuts;
  std::stable_sort(cuts.begin(), cuts.end(), [](const Cut& a, const Cut& b) {
    return a.side.size() > b.side.size();
  });

  // Sides avoid vertex 0, so two of them cross iff they overlap without nesting.
  const auto count = static_cast<int>(cuts.size());
  std::vector<Node> parent(count + 1, 0);
  std::vector<double> weight(count + 1, 0.0);
  for (int i = 0; i < count; ++i) {
    weight[i + 1] = cuts[i].weight;
    for (int j = 0; j < i; ++j) {
      const auto common = set_intersection(cuts[i].side, cuts[j].side);
      if (common.empty()) continue;
      if (common.size() != cuts[i].side.size()) {
        throw NotLaminar("near-mincuts cross: sides of size " + std::to_string(cuts[j].side.size()) +
                         " and " + std::to_string(cuts[i].side.size()));
      }
      parent[i + 1] = j + 1;  // supersets are visited largest first
    }
  }
  std::vector<Node> phi(n, 0);
  for (int i = 0; i < count; ++i) {
    for (Vertex v : cuts[i].side) phi[v] = i + 1;
  }
  return CutTree(std::move(parent), std::move(weight), std::move(phi), 0, family.mincut, epsilon1);
}

std::vector<Cut> tree_cuts(const WeightedGraph& g, const CutTree& t) {
  std::vector<Cut> out;
  for (Node a = 0; a < t.num_nodes(); ++a) {
    if (a == t.root()) continue;
    auto side = t.vertices_under(a);
    if (!side.empty() && side.front() == 0) side = complement(side, g.num_vertices());
    out.push_back({std::move(side), t.edge_weight(a)});
  }
  std::sort(out.begin(), out.end(), [](const Cut& a, const Cut& b) { return a.side < b.side; });
  return out;
}

void check_selection(const CutTree& t, const std::vector<Node>& nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node a = nodes[i];
    if (a < 0 || a >= t.num_nodes()) throw InvalidInput("selection names an unknown node");
    if (a == t.root()) throw InvalidInput("selection contains the root");
    for (std::size_t j = 0; j < i; ++j) {
      if (t.is_ancestor(a, nodes[j]) || t.is_ancestor(nodes[j], a)) {
        throw InvalidInput("selection nodes " + std::to_string(nodes[j]) + " and " +
                           std::to_string(a) + " are comparable");
      }
    }
  }
}

namespace {

// label[v] = index of the selected node above phi(v), or -1.
std::vector<int> selection_labels(const CutTree& t, const std::vector<Node>& nodes) {
  std::vector<int> label(t.num_vertices(), -1);
  for (Vertex v = 0; v < t.num_vertices(); ++v) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (t.is_ancestor(nodes[i], t.phi(v))) {
        label[v] = static_cast<int>(i);
        break;
      }
    }
  }
  return label;
}

}  // namespace

double saved(const WeightedGraph& g, const CutTree& t, const std::vector<Node>& nodes) {
  check_selection(t, nodes);
  const auto label = selection_labels(t, nodes);
  double total = 0.0;
  for (const auto& e : g.edges()) {
    if (label[e.u] >= 0 && label[e.v] >= 0 && label[e.u] != label[e.v]) total += e.w;
  }
  return total;
}

Partition partition_from_selection(const WeightedGraph& g, const CutTree& t,
                                   const std::vector<Node>& nodes) {
  check_selection(t, nodes);
  const auto label = selection_labels(t, nodes);
  std::vector<VertexSet> parts(nodes.size() + 1);
  for (Vertex v = 0; v < t.num_vertices(); ++v) {
    parts[label[v] >= 0 ? label[v] : nodes.size()].push_back(v);
  }
  if (parts.back().empty()) throw InvalidInput("selection leaves no vertex outside its subtrees");
  return make_partition(g, std::move(parts));
}

void write_tree(std::ostream& out, const CutTree& t) {
  const auto flags = out.flags();
  out << std::setprecision(17);
  for (Node a = 0; a < t.num_nodes(); ++a) {
    out << "t " << a << ' ' << t.parent(a) << ' ' << t.edge_weight(a) << '\n';
  }
  for (Vertex v = 0; v < t.num_vertices(); ++v) out << "m " << v << ' ' << t.phi(v) << '\n';
  out.flags(flags);
}

}  // namespace kcut
