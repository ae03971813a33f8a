#include "kcut/partial_vc.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "kcut/rng.hpp"

namespace kcut {

namespace {

constexpr std::int64_t kInfCost = std::numeric_limits<std::int64_t>::max() / 4;

void check_k(int k, Vertex n) {
  if (k < 1 || k > n) {
    throw InvalidInput("partial VC needs 1 <= k <= |V|, got k=" + std::to_string(k) +
                       " with |V|=" + std::to_string(n));
  }
}

struct RedComponent {
  VertexSet vertices;
  std::int64_t cost = 0;
};

std::vector<RedComponent> red_components(const WeightedGraph& g, std::span<const char> red) {
  const Vertex n = g.num_vertices();
  std::vector<int> comp(n, -1);
  std::vector<RedComponent> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (!red[s] || comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      out[id].vertices.push_back(v);
      for (const auto& nb : g.neighbors(v)) {
        if (red[nb.to] && comp[nb.to] < 0) {
          comp[nb.to] = id;
          stack.push_back(nb.to);
        }
      }
    }
    std::sort(out[id].vertices.begin(), out[id].vertices.end());
  }
  for (const auto& e : g.edges()) {
    const auto w = std::llround(e.w);
    const int cu = comp[e.u];
    const int cv = comp[e.v];
    if (cu >= 0) out[cu].cost += w;
    if (cv >= 0 && cv != cu) out[cv].cost += w;
  }
  return out;
}

// Components grouped by (size, cost), keeping at most k of each type.
std::map<std::pair<int, std::int64_t>, std::vector<int>> typed_components(
    const std::vector<RedComponent>& comps, int k, double tau) {
  std::map<std::pair<int, std::int64_t>, std::vector<int>> types;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto size = static_cast<int>(comps[i].vertices.size());
    if (size > k || static_cast<double>(comps[i].cost) > tau) continue;
    auto& bucket = types[{size, comps[i].cost}];
    if (static_cast<int>(bucket.size()) < k) bucket.push_back(static_cast<int>(i));
  }
  return types;
}

PvcSolution least_degree_pick(const WeightedGraph& g, int k, bool extended) {
  std::vector<Vertex> order(g.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  auto degree = [&](Vertex v) {
    return g.weighted_degree(v) + (extended ? g.vertex_weight(v) : 0.0);
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return degree(a) < degree(b); });
  VertexSet chosen(order.begin(), order.begin() + k);
  std::sort(chosen.begin(), chosen.end());
  const double value = pvc_objective(g, chosen);
  return {std::move(chosen), value};
}

}  // namespace

double pvc_objective(const WeightedGraph& g, const VertexSet& s) {
  std::vector<char> in(g.num_vertices(), 0);
  double value = 0.0;
  for (Vertex v : s) {
    if (!in[v]) value += g.vertex_weight(v);
    in[v] = 1;
  }
  for (const auto& e : g.edges()) {
    if (in[e.u] || in[e.v]) value += e.w;
  }
  return value;
}

void validate(const PvcInstance& instance) {
  check_k(instance.k, instance.graph.num_vertices());
  if (!(instance.delta > 0.0 && instance.delta < 1.0)) {
    throw InvalidInput("partial VC delta must lie in (0,1)");
  }
}

PvcSolution pvc_bruteforce(const PvcInstance& instance, std::uint64_t budget) {
  const auto& g = instance.graph;
  const Vertex n = g.num_vertices();
  const int k = instance.k;
  check_k(k, n);
  const double log_count =
      std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
  if (log_count > std::log(static_cast<double>(budget)) + 1e-9) {
    throw SizeGuardExceeded("C(" + std::to_string(n) + "," + std::to_string(k) +
                            ") subsets exceed the brute-force budget");
  }
  std::vector<Vertex> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  PvcSolution best{{}, std::numeric_limits<double>::infinity()};
  while (true) {
    VertexSet s(idx.begin(), idx.end());
    const double value = pvc_objective(g, s);
    if (value < best.value - kWeightTolerance) best = {std::move(s), value};
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

std::vector<ComponentType> component_types(const WeightedGraph& g, int k, double tau,
                                           std::span<const char> red) {
  std::vector<ComponentType> out;
  for (const auto& [key, comps] : typed_components(red_components(g, red), k, tau)) {
    out.push_back({key.first, key.second, static_cast<int>(comps.size())});
  }
  return out;
}

std::optional<PvcSolution> color_coding_trial(const WeightedGraph& g, int k, double tau,
                                              std::span<const char> red) {
  const auto comps = red_components(g, red);
  const auto types = typed_components(comps, k, tau);

  // best[t][j]: cheapest total cost using the first t types with total size j.
  const std::size_t num_types = types.size();
  std::vector<std::vector<std::int64_t>> best(num_types + 1,
                                              std::vector<std::int64_t>(k + 1, kInfCost));
  std::vector<std::vector<int>> copies(num_types + 1, std::vector<int>(k + 1, 0));
  best[0][0] = 0;
  std::size_t t = 0;
  for (const auto& [key, members] : types) {
    ++t;
    const auto [size, cost] = key;
    const int available = static_cast<int>(members.size());
    for (int j = 0; j <= k; ++j) {
      for (int l = 0; l <= available && l * size <= j; ++l) {
        const auto prev = best[t - 1][j - l * size];
        if (prev >= kInfCost) continue;
        const auto candidate = prev + l * cost;
        if (candidate < best[t][j]) {
          best[t][j] = candidate;
          copies[t][j] = l;
        }
      }
    }
  }
  if (best[num_types][k] >= kInfCost) return std::nullopt;

  VertexSet chosen;
  int j = k;
  t = num_types;
  for (auto it = types.rbegin(); it != types.rend(); ++it, --t) {
    const int l = copies[t][j];
    for (int c = 0; c < l; ++c) {
      const auto& vs = comps[it->second[c]].vertices;
      chosen.insert(chosen.end(), vs.begin(), vs.end());
    }
    j -= l * it->first.first;
  }
  std::sort(chosen.begin(), chosen.end());
  return PvcSolution{std::move(chosen), static_cast<double>(best[num_types][k])};
}

std::optional<PvcSolution> color_coding_trial(const WeightedGraph& g, int k, double tau,
                                              std::uint64_t seed) {
  Rng rng(seed);
  std::vector<char> red(g.num_vertices());
  for (auto& r : red) r = static_cast<char>(rng() & 1U);
  return color_coding_trial(g, k, tau, red);
}

PvcSolution pvc_bounded(const WeightedGraph& g, int k, double delta, std::uint64_t seed,
                        const PvcOptions& options, std::span<const Vertex> always_blue) {
  const Vertex n = g.num_vertices();
  check_k(k, n);
  if (!(delta > 0.0 && delta <= 1.0)) throw InvalidInput("bounded partial VC needs delta in (0,1]");
  double max_weight = 1.0;
  for (const auto& e : g.edges()) {
    if (e.w < 1.0 || std::abs(e.w - std::round(e.w)) > 1e-9 * std::max(1.0, e.w)) {
      throw InvalidInput("bounded partial VC needs integer edge weights >= 1, got " +
                         std::to_string(e.w));
    }
    max_weight = std::max(max_weight, e.w);
  }
  if (g.has_vertex_weights()) throw InvalidInput("bounded partial VC takes no vertex weights");

  // Large-optimum branch.
  PvcSolution best = least_degree_pick(g, k, false);

  // Small-optimum branch: color coding with O(2^(tau+k) log n) rounds.
  const double tau = max_weight * k * k / delta;
  std::vector<char> blue_fixed(n, 0);
  for (Vertex v : always_blue) blue_fixed[v] = 1;
  std::vector<Vertex> free;
  for (Vertex v = 0; v < n; ++v) {
    if (!blue_fixed[v]) free.push_back(v);
  }
  const double log2_wanted =
      tau + k + std::log2(std::max(1.0, std::log(n * options.trials_safety)));
  const double log2_budget = std::log2(static_cast<double>(std::max<std::uint64_t>(options.max_trials, 1)));
  const double log2_trials = std::min(log2_wanted, log2_budget);

  std::vector<char> red(n, 0);
  auto consider = [&](const std::optional<PvcSolution>& s) {
    if (s && s->value < best.value - kWeightTolerance) best = *s;
  };
  const auto nf = static_cast<int>(free.size());
  if (nf <= 62 && static_cast<double>(nf) <= log2_trials) {
    const std::uint64_t colorings = std::uint64_t{1} << nf;
    for (std::uint64_t mask = 0; mask < colorings; ++mask) {
      if (std::popcount(mask) < k) continue;
      for (int i = 0; i < nf; ++i) red[free[i]] = static_cast<char>((mask >> i) & 1U);
      consider(color_coding_trial(g, k, tau, red));
    }
  } else {
    const auto trials = static_cast<std::uint64_t>(std::ceil(std::exp2(log2_trials)));
    Rng rng(derive_seed(seed, "color-coding"));
    for (std::uint64_t t = 0; t < trials; ++t) {
      for (Vertex v : free) red[v] = static_cast<char>(rng() & 1U);
      consider(color_coding_trial(g, k, tau, red));
    }
  }
  best.value = pvc_objective(g, best.chosen);
  return best;
}

double extended_weighted_degree(const WeightedGraph& g, Vertex v) {
  return g.vertex_weight(v) + g.weighted_degree(v);
}

std::optional<BoundedReduction> bounded_reduction(const WeightedGraph& g, int k,
                                                  double delta_prime, Vertex heaviest) {
  const Vertex n = g.num_vertices();
  const double limit = extended_weighted_degree(g, heaviest);
  if (!(limit > 0.0)) return std::nullopt;

  std::vector<Vertex> local(n, -1);
  std::vector<Vertex> original;
  for (Vertex u = 0; u < n; ++u) {
    if (extended_weighted_degree(g, u) <= limit) {
      local[u] = static_cast<Vertex>(original.size());
      original.push_back(u);
    }
  }
  const auto kept = static_cast<Vertex>(original.size());
  if (kept < k) return std::nullopt;

  const double kk = static_cast<double>(k) * k;
  const double light_edge = limit * delta_prime / kk;
  const double light_vertex = limit * delta_prime / k;
  const double unit = limit * delta_prime * delta_prime / kk;
  auto to_units = [&](double w) { return std::max(1.0, std::floor(w / unit + 0.5)); };

  std::vector<double> vertex_weight(kept, 0.0);
  for (Vertex x = 0; x < kept; ++x) vertex_weight[x] = g.vertex_weight(original[x]);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    const Vertex a = local[e.u];
    const Vertex b = local[e.v];
    if (a < 0 && b < 0) continue;
    if (a < 0 || b < 0) {
      // The removed endpoint can never be chosen, so the edge is paid exactly
      // when the surviving endpoint is.
      vertex_weight[a < 0 ? b : a] += e.w;
    } else if (e.w < light_edge) {
      vertex_weight[a] += e.w;
      vertex_weight[b] += e.w;
    } else {
      edges.push_back({a, b, to_units(e.w)});
    }
  }
  const Vertex p = kept;
  const Vertex q = kept + 1;
  for (Vertex x = 0; x < kept; ++x) {
    if (vertex_weight[x] >= light_vertex) edges.push_back({x, p, to_units(vertex_weight[x])});
  }
  edges.push_back({p, q, to_units(limit * kk)});
  original.push_back(-1);
  original.push_back(-1);

  BoundedReduction out{WeightedGraph(kept + 2, std::move(edges)), std::move(original), p, q, limit,
                       unit};
  return out;
}

PvcSolution pvc_general(const PvcInstance& instance, std::uint64_t seed, const PvcOptions& options) {
  validate(instance);
  const auto& g = instance.graph;
  const Vertex n = g.num_vertices();
  const int k = instance.k;
  if (k == n) {
    VertexSet all = all_vertices(n);
    const double value = pvc_objective(g, all);
    return {std::move(all), value};
  }
  const double delta_prime = instance.delta / 4.0;
  const std::uint64_t stream = derive_seed(seed, "partial-vc");

  std::optional<PvcSolution> best;
  auto consider = [&](VertexSet s) {
    const double value = pvc_objective(g, s);
    if (!best || value < best->value - kWeightTolerance) best = PvcSolution{std::move(s), value};
  };

  std::vector<double> tried;
  for (Vertex guess = 0; guess < n; ++guess) {
    const double limit = extended_weighted_degree(g, guess);
    if (std::find(tried.begin(), tried.end(), limit) != tried.end()) continue;
    tried.push_back(limit);
    if (limit <= 0.0) {
      // Every surviving vertex is free; any k of them are optimal.
      VertexSet zero;
      for (Vertex u = 0; u < n && static_cast<int>(zero.size()) < k; ++u) {
        if (extended_weighted_degree(g, u) <= 0.0) zero.push_back(u);
      }
      if (static_cast<int>(zero.size()) == k) consider(std::move(zero));
      continue;
    }
    const auto reduced = bounded_reduction(g, k, delta_prime, guess);
    if (!reduced) continue;
    const std::array<Vertex, 2> sentinels{reduced->p, reduced->q};
    const auto sol = pvc_bounded(reduced->graph, k, delta_prime,
                                 derive_seed(stream, static_cast<std::uint64_t>(guess)), options,
                                 sentinels);
    VertexSet mapped;
    for (Vertex x : sol.chosen) {
      if (reduced->original[x] >= 0) mapped.push_back(reduced->original[x]);
    }
    if (static_cast<int>(mapped.size()) != k) continue;
    std::sort(mapped.begin(), mapped.end());
    consider(std::move(mapped));
  }
  if (!best) return least_degree_pick(g, k, true);
  return *best;
}

}  // namespace kcut
