#include "kcut/cut_primitives.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

#include "kcut/rng.hpp"

namespace kcut {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_binomial(double n, double r) {
  if (r < 0 || r > n) return -kInf;
  return std::lgamma(n + 1) - std::lgamma(r + 1) - std::lgamma(n - r + 1);
}

// Calls visit(side, weight) for every cut (S, V \ S) with 0 not in S whose
// weight is at most `threshold`. Depth-first over side assignments in
// maximum-adjacency order; a branch is cut off once the edges already
// crossing plus, for each unplaced vertex, the cheaper of its edges to
// either side exceed the threshold.
template <typename Visit>
void for_each_cut_below(const WeightedGraph& g, double threshold, Visit&& visit) {
  const Vertex n = g.num_vertices();
  if (n < 2) return;
  const double slack = 1e-6 * std::max(1.0, std::abs(threshold));

  std::vector<Vertex> order{0};
  {
    std::vector<double> attach(n, 0.0);
    std::vector<char> taken(n, 0);
    taken[0] = 1;
    for (const auto& nb : g.neighbors(0)) attach[nb.to] += nb.w;
    for (Vertex step = 1; step < n; ++step) {
      Vertex best = -1;
      for (Vertex v = 0; v < n; ++v) {
        if (!taken[v] && (best < 0 || attach[v] > attach[best])) best = v;
      }
      taken[best] = 1;
      order.push_back(best);
      for (const auto& nb : g.neighbors(best)) attach[nb.to] += nb.w;
    }
  }

  // side[v]: -1 unplaced, 0 with vertex 0, 1 in S.
  std::vector<int> side(n, -1);
  std::vector<double> to_side0(n, 0.0), to_side1(n, 0.0);
  double crossing = 0.0;
  double pending = 0.0;  // sum over unplaced v of min(to_side0, to_side1)
  int in_count = 0;

  auto place = [&](Vertex v, int s) {
    pending -= std::min(to_side0[v], to_side1[v]);
    crossing += s == 0 ? to_side1[v] : to_side0[v];
    side[v] = s;
    for (const auto& nb : g.neighbors(v)) {
      if (side[nb.to] >= 0) continue;
      const double before = std::min(to_side0[nb.to], to_side1[nb.to]);
      (s == 0 ? to_side0 : to_side1)[nb.to] += nb.w;
      pending += std::min(to_side0[nb.to], to_side1[nb.to]) - before;
    }
    in_count += s;
  };
  auto unplace = [&](Vertex v, int s) {
    for (const auto& nb : g.neighbors(v)) {
      if (side[nb.to] >= 0) continue;
      const double before = std::min(to_side0[nb.to], to_side1[nb.to]);
      (s == 0 ? to_side0 : to_side1)[nb.to] -= nb.w;
      pending += std::min(to_side0[nb.to], to_side1[nb.to]) - before;
    }
    side[v] = -1;
    crossing -= s == 0 ? to_side1[v] : to_side0[v];
    pending += std::min(to_side0[v], to_side1[v]);
    in_count -= s;
  };

  auto emit = [&] {
    double exact = 0.0;
    for (const auto& e : g.edges()) {
      if (side[e.u] != side[e.v]) exact += e.w;
    }
    if (exact > threshold) return;
    VertexSet s;
    for (Vertex u = 1; u < n; ++u) {
      if (side[u] == 1) s.push_back(u);
    }
    visit(std::move(s), exact);
  };

  auto descend = [&](auto&& self, std::size_t depth) -> void {
    if (depth == order.size()) {
      if (in_count > 0) emit();
      return;
    }
    const Vertex v = order[depth];
    for (int s = 0; s < 2; ++s) {
      place(v, s);
      if (crossing + pending <= threshold + slack) self(self, depth + 1);
      unplace(v, s);
    }
  };
  place(0, 0);
  descend(descend, 1);
}

// Union-find over vertex ids, used by random contraction.
class DisjointSets {
 public:
  explicit DisjointSets(Vertex n) : parent_(n), count_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  Vertex find(Vertex v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    --count_;
    return true;
  }
  Vertex count() const { return count_; }

 private:
  std::vector<Vertex> parent_;
  Vertex count_;
};

// One run of weighted random contraction down to `target` super-vertices.
// Returns the super-vertex groups. When no edge is left between groups,
// two random groups are merged.
std::vector<VertexSet> random_contraction(const WeightedGraph& g, Vertex target, Rng& rng) {
  const Vertex n = g.num_vertices();
  DisjointSets dsu(n);
  const auto edges = g.edges();
  while (dsu.count() > target) {
    double total = 0.0;
    for (const auto& e : edges) {
      if (dsu.find(e.u) != dsu.find(e.v)) total += e.w;
    }
    if (total > 0.0) {
      std::uniform_real_distribution<double> pick(0.0, total);
      double r = pick(rng);
      const Edge* chosen = nullptr;
      for (const auto& e : edges) {
        if (dsu.find(e.u) == dsu.find(e.v)) continue;
        chosen = &e;
        r -= e.w;
        if (r <= 0.0) break;
      }
      dsu.unite(chosen->u, chosen->v);
    } else {
      std::vector<Vertex> roots;
      for (Vertex v = 0; v < n; ++v) {
        if (dsu.find(v) == v) roots.push_back(v);
      }
      std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
      const auto a = pick(rng);
      auto b = pick(rng);
      while (b == a) b = pick(rng);
      dsu.unite(roots[a], roots[b]);
    }
  }
  std::vector<Vertex> index(n, -1);
  std::vector<VertexSet> groups;
  for (Vertex v = 0; v < n; ++v) {
    const Vertex r = dsu.find(v);
    if (index[r] < 0) {
      index[r] = static_cast<Vertex>(groups.size());
      groups.emplace_back();
    }
    groups[index[r]].push_back(v);
  }
  return groups;
}

// Branch-and-bound search for a minimum partition into exactly k blocks.
class KPartitionSearch {
 public:
  KPartitionSearch(const WeightedGraph& g, int k) : g_(g), k_(k), n_(g.num_vertices()) {
    order_ = max_adjacency_order();
    position_.assign(n_, 0);
    for (Vertex i = 0; i < n_; ++i) position_[order_[i]] = i;
    block_.assign(n_, -1);
    conn_.assign(static_cast<std::size_t>(n_) * k_, 0.0);
    total_.assign(n_, 0.0);
  }

  Partition solve(const Partition& incumbent) {
    best_ = incumbent.cut_weight;
    best_block_ = part_labels(incumbent, n_);
    search(0, 0, 0.0);
    std::vector<VertexSet> parts(k_);
    for (Vertex v = 0; v < n_; ++v) parts[best_block_[v]].push_back(v);
    return make_partition(g_, std::move(parts));
  }

 private:
  std::vector<Vertex> max_adjacency_order() const {
    std::vector<Vertex> order;
    std::vector<double> attach(n_, 0.0);
    std::vector<char> placed(n_, 0);
    for (Vertex it = 0; it < n_; ++it) {
      Vertex pick = -1;
      for (Vertex v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        if (pick < 0 || attach[v] > attach[pick] ||
            (attach[v] == attach[pick] && g_.weighted_degree(v) > g_.weighted_degree(pick))) {
          pick = v;
        }
      }
      placed[pick] = 1;
      order.push_back(pick);
      for (const auto& nb : g_.neighbors(pick)) attach[nb.to] += nb.w;
    }
    return order;
  }

  double& conn(Vertex v, int b) { return conn_[static_cast<std::size_t>(v) * k_ + b]; }

  double lower_bound(Vertex pos, int used) {
    double lb = 0.0;
    const bool forced_new = (n_ - pos) == (k_ - used);
    for (Vertex p = pos; p < n_; ++p) {
      const Vertex v = order_[p];
      if (forced_new) {
        lb += total_[v];
        continue;
      }
      double best = used < k_ ? total_[v] : kInf;
      for (int b = 0; b < used; ++b) best = std::min(best, total_[v] - conn(v, b));
      lb += std::max(0.0, best);
    }
    return lb;
  }

  void place(Vertex v, int b, double sign) {
    block_[v] = sign > 0 ? b : -1;
    for (const auto& nb : g_.neighbors(v)) {
      if (position_[nb.to] > position_[v]) {
        conn(nb.to, b) += sign * nb.w;
        total_[nb.to] += sign * nb.w;
      }
    }
  }

  void search(Vertex pos, int used, double cost) {
    if (pos == n_) {
      if (used == k_ && cost < best_ - kWeightTolerance) {
        best_ = cost;
        best_block_ = block_;
      }
      return;
    }
    const int remaining = n_ - pos;
    if (remaining < k_ - used) return;
    if (cost + lower_bound(pos, used) >= best_ - kWeightTolerance) return;

    const Vertex v = order_[pos];
    std::vector<std::pair<double, int>> choices;
    if (remaining > k_ - used) {
      for (int b = 0; b < used; ++b) choices.emplace_back(total_[v] - conn(v, b), b);
    }
    if (used < k_) choices.emplace_back(total_[v], used);
    std::stable_sort(choices.begin(), choices.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [extra, b] : choices) {
      const double next = cost + std::max(0.0, extra);
      if (next >= best_ - kWeightTolerance) continue;
      place(v, b, +1.0);
      search(pos + 1, b == used ? used + 1 : used, next);
      place(v, b, -1.0);
    }
  }

  const WeightedGraph& g_;
  int k_;
  Vertex n_;
  std::vector<Vertex> order_;
  std::vector<Vertex> position_;
  std::vector<int> block_;
  std::vector<double> conn_;
  std::vector<double> total_;
  double best_ = kInf;
  std::vector<int> best_block_;
};

}  // namespace

Cut global_mincut(const WeightedGraph& g) {
  const Vertex n = g.num_vertices();
  if (n < 2) throw InvalidInput("global mincut needs at least two vertices");
  std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
  for (const auto& e : g.edges()) {
    w[e.u][e.v] += e.w;
    w[e.v][e.u] += e.w;
  }
  std::vector<VertexSet> group(n);
  for (Vertex v = 0; v < n; ++v) group[v] = {v};
  std::vector<Vertex> active(n);
  std::iota(active.begin(), active.end(), 0);

  double best = kInf;
  VertexSet best_side;
  std::vector<double> key;
  std::vector<char> added;
  while (active.size() > 1) {
    const std::size_t m = active.size();
    key.assign(m, 0.0);
    added.assign(m, 0);
    std::size_t prev = 0;
    std::size_t last = 0;
    for (std::size_t it = 0; it < m; ++it) {
      std::size_t pick = m;
      for (std::size_t j = 0; j < m; ++j) {
        if (!added[j] && (pick == m || key[j] > key[pick])) pick = j;
      }
      added[pick] = 1;
      prev = last;
      last = pick;
      for (std::size_t j = 0; j < m; ++j) {
        if (!added[j]) key[j] += w[active[pick]][active[j]];
      }
    }
    if (key[last] <= best + kWeightTolerance) {
      best = std::min(best, key[last]);
      best_side = group[active[last]];
    }
    const Vertex s = active[prev];
    const Vertex t = active[last];
    group[s].insert(group[s].end(), group[t].begin(), group[t].end());
    for (Vertex x = 0; x < n; ++x) {
      w[s][x] += w[t][x];
      w[x][s] = w[s][x];
    }
    w[s][s] = 0.0;
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(last));
  }
  return make_cut(g, std::move(best_side));
}

Vertex default_oracle_max_vertices() {
  if (const char* env = std::getenv("KCUT_MAX_ORACLE_N")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && value > 0) return static_cast<Vertex>(value);
  }
  return 26;
}

Partition exact_kcut_oracle(const WeightedGraph& g, int k, Vertex max_vertices) {
  const Vertex n = g.num_vertices();
  if (k < 1 || k > n) {
    throw InvalidInput("k=" + std::to_string(k) + " out of range [1," + std::to_string(n) + "]");
  }
  if (n > max_vertices) {
    throw SizeGuardExceeded("exact k-cut oracle limited to " + std::to_string(max_vertices) +
                            " vertices, got " + std::to_string(n));
  }
  if (k == 1) return make_partition(g, {all_vertices(n)});
  if (k == n) {
    std::vector<VertexSet> parts;
    for (Vertex v = 0; v < n; ++v) parts.push_back({v});
    return make_partition(g, std::move(parts));
  }
  KPartitionSearch search(g, k);
  return search.solve(greedy_sv(g, k));
}

std::optional<Partition> min_four_cut(const WeightedGraph& g, const MinFourCutOptions& options) {
  const Vertex n = g.num_vertices();
  if (n < 4) return std::nullopt;
  if (options.mode == FourCutMode::exact) {
    return exact_kcut_oracle(g, 4, options.max_exact_vertices);
  }
  // A fixed minimum 4-cut survives contraction to 4 vertices with
  // probability at least 1 / C(n, 6); repeat until the miss probability is
  // below 1/n^3.
  std::uint64_t trials = 1;
  if (n > 4) {
    const double log_trials = log_binomial(std::max<double>(n, 6), 6) + std::log(3.0 * std::log(n));
    const double wanted = std::ceil(std::exp(log_trials));
    trials = std::max<std::uint64_t>(64, static_cast<std::uint64_t>(
                                             std::min(wanted, static_cast<double>(options.max_trials))));
    trials = std::min(trials, options.max_trials);
  }
  Rng rng(derive_seed(options.seed, "min4cut"));
  std::optional<Partition> best;
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto p = make_partition(g, random_contraction(g, 4, rng));
    if (!best || p.cut_weight < best->cut_weight - kWeightTolerance) best = std::move(p);
  }
  return best;
}

GreedySplit greedy_split(const WeightedGraph& g, std::vector<VertexSet> parts, int k,
                         TieBreak tie_break) {
  Vertex total = 0;
  for (auto& part : parts) {
    std::sort(part.begin(), part.end());
    total += static_cast<Vertex>(part.size());
  }
  if (total < k) throw InvalidInput("cannot split " + std::to_string(total) +
                                    " vertices into " + std::to_string(k) + " parts");
  if (static_cast<int>(parts.size()) > k) throw InvalidInput("more parts than k");

  // Cached mincut of each part, as a side in parent ids.
  std::vector<std::optional<Cut>> cached(parts.size());
  auto part_cut = [&](std::size_t i) -> const std::optional<Cut>& {
    if (!cached[i] && parts[i].size() >= 2) {
      const auto sub = induced_subgraph(g, parts[i]);
      const Cut local = global_mincut(sub.graph);
      VertexSet side;
      for (Vertex v : local.side) side.push_back(sub.vertices[v]);
      cached[i] = Cut{std::move(side), local.weight};
    }
    return cached[i];
  };

  GreedySplit out;
  while (static_cast<int>(parts.size()) < k) {
    std::size_t chosen = parts.size();
    double best = kInf;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto& cut = part_cut(i);
      if (!cut) continue;
      if (cut->weight < best - kWeightTolerance) {
        best = cut->weight;
        chosen = i;
      } else if (tie_break == TieBreak::adversarial && cut->weight <= best + kWeightTolerance &&
                 parts[i].size() > parts[chosen].size()) {
        chosen = i;
      }
    }
    VertexSet side = part_cut(chosen)->side;
    double weight = part_cut(chosen)->weight;
    if (tie_break == TieBreak::adversarial) {
      const auto sub = induced_subgraph(g, parts[chosen]);
      if (sub.graph.num_vertices() > 24) {
        throw SizeGuardExceeded("adversarial tie-breaking enumerates cuts of parts up to 24 vertices");
      }
      std::size_t most_edges = 0;
      VertexSet pick;
      for_each_cut_below(sub.graph, weight + kWeightTolerance, [&](VertexSet s, double w) {
        std::vector<char> in(sub.graph.num_vertices(), 0);
        for (Vertex v : s) in[v] = 1;
        std::size_t crossing = 0;
        for (const auto& e : sub.graph.edges()) crossing += (in[e.u] != in[e.v]) ? 1 : 0;
        if (pick.empty() || crossing > most_edges || (crossing == most_edges && s < pick)) {
          most_edges = crossing;
          pick = std::move(s);
          weight = w;
        }
      });
      side.clear();
      for (Vertex v : pick) side.push_back(sub.vertices[v]);
    }
    // The part keeps the side holding its smallest vertex.
    VertexSet other = set_difference(parts[chosen], side);
    if (!side.empty() && side.front() == parts[chosen].front()) std::swap(side, other);
    parts[chosen] = std::move(other);
    parts.push_back(std::move(side));
    cached[chosen].reset();
    cached.emplace_back();
    out.added_cuts.push_back(weight);
  }
  out.partition = make_partition(g, std::move(parts));
  return out;
}

Partition greedy_sv(const WeightedGraph& g, int k, TieBreak tie_break) {
  if (k < 1 || k > g.num_vertices()) {
    throw InvalidInput("k=" + std::to_string(k) + " out of range for greedy_sv");
  }
  return greedy_split(g, {all_vertices(g.num_vertices())}, k, tie_break).partition;
}

CutFamily enumerate_near_mincuts(const WeightedGraph& g, double epsilon,
                                 const NearMincutOptions& options) {
  const Vertex n = g.num_vertices();
  if (n < 2) throw InvalidInput("near-mincut enumeration needs at least two vertices");
  if (!(epsilon >= 0.0)) throw InvalidInput("epsilon must be non-negative");
  CutFamily family;
  family.epsilon = epsilon;
  family.num_vertices = n;
  family.mincut = global_mincut(g).weight;
  const double threshold = (1.0 + epsilon) * family.mincut + kWeightTolerance;

  if (n <= options.max_exhaustive_vertices) {
    for_each_cut_below(g, threshold, [&](VertexSet side, double w) {
      family.cuts.push_back({std::move(side), w});
    });
  } else {
    if (!options.allow_randomized) {
      throw SizeGuardExceeded("exhaustive near-mincut enumeration limited to " +
                              std::to_string(options.max_exhaustive_vertices) + " vertices");
    }
    // An alpha-approximate mincut survives contraction to ceil(2 alpha)
    // vertices with probability >= n^(-2 alpha).
    const auto target = static_cast<Vertex>(std::max(2.0, std::ceil(2.0 * (1.0 + epsilon))));
    const double wanted = std::ceil(std::pow(n, 2.0 * (1.0 + epsilon)) * std::log(n));
    const auto trials = static_cast<std::uint64_t>(std::min(wanted, static_cast<double>(options.max_trials)));
    Rng rng(derive_seed(options.seed, "near-mincuts"));
    std::vector<VertexSet> found;
    for (std::uint64_t t = 0; t < trials; ++t) {
      const auto groups = random_contraction(g, target, rng);
      const auto contracted = contract(g, groups);
      for_each_cut_below(contracted.graph, threshold, [&](VertexSet side, double) {
        VertexSet s = expand(contracted, side);
        if (!s.empty() && s.front() == 0) s = complement(s, n);
        found.push_back(std::move(s));
      });
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    for (auto& s : found) {
      const double w = boundary_weight(g, s);
      family.cuts.push_back({std::move(s), w});
    }
  }
  std::sort(family.cuts.begin(), family.cuts.end(),
            [](const Cut& a, const Cut& b) { return a.side < b.side; });
  return family;
}

bool is_laminar(const CutFamily& family) {
  for (std::size_t i = 0; i < family.cuts.size(); ++i) {
    for (std::size_t j = i + 1; j < family.cuts.size(); ++j) {
      if (crosses(family.cuts[i], family.cuts[j], family.num_vertices)) return false;
    }
  }
  return true;
}

}  // namespace kcut
