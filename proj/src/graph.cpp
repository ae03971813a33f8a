#include "kcut/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace kcut {

namespace {

void check_weight(double w, const char* what) {
  if (!std::isfinite(w) || w < 0.0) {
    throw InvalidInput(std::string(what) + " must be finite and non-negative, got " +
                       std::to_string(w));
  }
}

void check_vertex(Vertex v, Vertex n) {
  if (v < 0 || v >= n) {
    throw InvalidInput("vertex id " + std::to_string(v) + " out of range [0," +
                       std::to_string(n) + ")");
  }
}

}  // namespace

WeightedGraph::WeightedGraph(Vertex num_vertices, std::vector<Edge> edges,
                             std::vector<double> vertex_weights)
    : n_(num_vertices), vertex_weights_(std::move(vertex_weights)) {
  if (n_ <= 0) throw InvalidInput("graph must have at least one vertex");
  if (vertex_weights_.empty()) vertex_weights_.assign(n_, 0.0);
  if (static_cast<Vertex>(vertex_weights_.size()) != n_) {
    throw InvalidInput("vertex weight count does not match vertex count");
  }
  for (double w : vertex_weights_) check_weight(w, "vertex weight");

  for (auto& e : edges) {
    check_vertex(e.u, n_);
    check_vertex(e.v, n_);
    check_weight(e.w, "edge weight");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::erase_if(edges, [](const Edge& e) { return e.u == e.v; });
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (const auto& e : edges) {
    if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v) {
      edges_.back().w += e.w;
    } else {
      edges_.push_back(e);
    }
  }

  degree_.assign(n_, 0.0);
  std::vector<std::size_t> count(n_ + 1, 0);
  for (const auto& e : edges_) {
    ++count[e.u];
    ++count[e.v];
    degree_[e.u] += e.w;
    degree_[e.v] += e.w;
    total_edge_weight_ += e.w;
  }
  offsets_.assign(n_ + 1, 0);
  for (Vertex v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + count[v];
  adjacency_.resize(offsets_[n_]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges_) {
    adjacency_[fill[e.u]++] = {e.v, e.w};
    adjacency_[fill[e.v]++] = {e.u, e.w};
  }
}

std::span<const Neighbor> WeightedGraph::neighbors(Vertex v) const {
  return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
}

bool WeightedGraph::has_vertex_weights() const {
  return std::any_of(vertex_weights_.begin(), vertex_weights_.end(),
                     [](double w) { return w != 0.0; });
}

bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
  return a.n_ == b.n_ && a.edges_ == b.edges_ && a.vertex_weights_ == b.vertex_weights_;
}

std::vector<int> part_labels(const Partition& p, Vertex num_vertices) {
  std::vector<int> label(num_vertices, -1);
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    for (Vertex v : p.parts[i]) label[v] = static_cast<int>(i);
  }
  return label;
}

namespace {

std::vector<int> validated_labels(const WeightedGraph& g,
                                  const std::vector<VertexSet>& parts) {
  const Vertex n = g.num_vertices();
  std::vector<int> label(n, -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw InvalidInput("partition has an empty part");
    for (Vertex v : parts[i]) {
      check_vertex(v, n);
      if (label[v] != -1) {
        throw InvalidInput("vertex " + std::to_string(v) + " appears in two parts");
      }
      label[v] = static_cast<int>(i);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (label[v] == -1) {
      throw InvalidInput("vertex " + std::to_string(v) + " is not covered by the partition");
    }
  }
  return label;
}

double crossing_weight(const WeightedGraph& g, const std::vector<int>& label) {
  double total = 0.0;
  for (const auto& e : g.edges()) {
    if (label[e.u] != label[e.v]) total += e.w;
  }
  return total;
}

}  // namespace

double cut_weight(const WeightedGraph& g, const std::vector<VertexSet>& parts) {
  return crossing_weight(g, validated_labels(g, parts));
}

double cut_weight(const WeightedGraph& g, const Partition& p) {
  return cut_weight(g, p.parts);
}

Partition make_partition(const WeightedGraph& g, std::vector<VertexSet> parts) {
  for (auto& part : parts) {
    std::sort(part.begin(), part.end());
  }
  Partition p;
  p.cut_weight = crossing_weight(g, validated_labels(g, parts));
  p.parts = std::move(parts);
  return p;
}

Partition canonical(Partition p) {
  for (auto& part : p.parts) std::sort(part.begin(), part.end());
  std::sort(p.parts.begin(), p.parts.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  return p;
}

double boundary_weight(const WeightedGraph& g, const VertexSet& s) {
  const Vertex n = g.num_vertices();
  std::vector<char> in(n, 0);
  Vertex count = 0;
  for (Vertex v : s) {
    check_vertex(v, n);
    if (!in[v]) ++count;
    in[v] = 1;
  }
  if (count == 0 || count == n) throw InvalidInput("cut side must be a proper non-empty subset");
  double total = 0.0;
  for (const auto& e : g.edges()) {
    if (in[e.u] != in[e.v]) total += e.w;
  }
  return total;
}

Cut make_cut(const WeightedGraph& g, VertexSet side) {
  std::sort(side.begin(), side.end());
  side.erase(std::unique(side.begin(), side.end()), side.end());
  const double w = boundary_weight(g, side);
  return {std::move(side), w};
}

InducedSubgraph induced_subgraph(const WeightedGraph& g, const VertexSet& s) {
  if (s.empty()) throw InvalidInput("induced subgraph of an empty vertex set");
  VertexSet vertices = s;
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<Vertex> local(g.num_vertices(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(vertices[i], g.num_vertices());
    local[vertices[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (local[e.u] >= 0 && local[e.v] >= 0) edges.push_back({local[e.u], local[e.v], e.w});
  }
  std::vector<double> vw;
  vw.reserve(vertices.size());
  for (Vertex v : vertices) vw.push_back(g.vertex_weight(v));
  const auto n = static_cast<Vertex>(vertices.size());
  return {WeightedGraph(n, std::move(edges), std::move(vw)), std::move(vertices)};
}

Contraction contract(const WeightedGraph& g, const std::vector<VertexSet>& groups) {
  const Vertex n = g.num_vertices();
  std::vector<Vertex> image(n, -1);
  std::vector<VertexSet> members;
  for (const auto& group : groups) {
    if (group.empty()) throw InvalidInput("cannot contract an empty group");
    const auto id = static_cast<Vertex>(members.size());
    VertexSet m;
    for (Vertex v : group) {
      check_vertex(v, n);
      if (image[v] != -1) throw InvalidInput("contraction groups overlap");
      image[v] = id;
      m.push_back(v);
    }
    std::sort(m.begin(), m.end());
    members.push_back(std::move(m));
  }
  for (Vertex v = 0; v < n; ++v) {
    if (image[v] == -1) {
      image[v] = static_cast<Vertex>(members.size());
      members.push_back({v});
    }
  }
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const auto& e : g.edges()) edges.push_back({image[e.u], image[e.v], e.w});
  std::vector<double> vw(members.size(), 0.0);
  for (Vertex v = 0; v < n; ++v) vw[image[v]] += g.vertex_weight(v);
  const auto m = static_cast<Vertex>(members.size());
  return {WeightedGraph(m, std::move(edges), std::move(vw)), std::move(members)};
}

VertexSet expand(const Contraction& c, const VertexSet& contracted) {
  VertexSet out;
  for (Vertex x : contracted) {
    check_vertex(x, c.graph.num_vertices());
    out.insert(out.end(), c.members[x].begin(), c.members[x].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet complement(const VertexSet& s, Vertex num_vertices) {
  return set_difference(all_vertices(num_vertices), s);
}

VertexSet all_vertices(Vertex num_vertices) {
  VertexSet all(num_vertices);
  std::iota(all.begin(), all.end(), 0);
  return all;
}

bool crosses(const Cut& a, const Cut& b, Vertex num_vertices) {
  const auto inter = set_intersection(a.side, b.side);
  if (inter.empty()) return false;
  if (inter.size() == a.side.size() || inter.size() == b.side.size()) return false;
  const auto uni = a.side.size() + b.side.size() - inter.size();
  return uni < static_cast<std::size_t>(num_vertices);
}

}  // namespace kcut
