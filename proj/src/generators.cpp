#include "kcut/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <string>

#include "kcut/cut_primitives.hpp"
#include "kcut/mincut_tree.hpp"
#include "kcut/rng.hpp"

namespace kcut {

WeightedGraph gen_two_clique(int k) {
  if (k < 2) throw InvalidInput("two_clique needs k >= 2");
  const Vertex n = k + k * k - 1;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < k; ++i) {
    for (Vertex j = i + 1; j < k; ++j) edges.push_back({i, j, 1.0});
  }
  const double light = 1.0 / (k + 1);
  for (Vertex i = k - 1; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j, light});
  }
  return WeightedGraph(n, std::move(edges));
}

namespace {

std::optional<PlantedInstance> try_planted(int k, int p, double eps1, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double c = 1.0;
  const int blobs = k - 1;
  const Vertex n = p * k;
  auto blob_vertex = [&](int b, int i) { return static_cast<Vertex>(p * (b + 1) + i); };
  auto pick = [&](int b) { return blob_vertex(b, static_cast<int>(rng() % p)); };
  auto core_vertex = [&] { return static_cast<Vertex>(rng() % p); };

  std::vector<Edge> edges;
  const double inner = 2.5 * (1.0 + eps1) * c / std::max(1, p - 1);
  for (int part = 0; part < k; ++part) {
    for (int i = 0; i < p; ++i) {
      for (int j = i + 1; j < p; ++j) {
        edges.push_back({static_cast<Vertex>(p * part + i), static_cast<Vertex>(p * part + j), inner});
      }
    }
  }

  std::vector<double> boundary(blobs);
  for (auto& t : boundary) t = c * (1.0 + eps1 * unit(rng));
  boundary[rng() % blobs] = c;

  // Disjoint blob pairs whose union becomes a near-mincut.
  std::vector<int> order(blobs);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const int groups = static_cast<int>(rng() % (blobs / 2 + 1));
  std::vector<int> partner(blobs, -1);
  std::vector<double> spent(blobs, 0.0);
  for (int g = 0; g < groups; ++g) {
    const int a = order[2 * g];
    const int b = order[2 * g + 1];
    partner[a] = b;
    partner[b] = a;
    const double target = c * (1.0 + eps1 * unit(rng));
    const double connector = (boundary[a] + boundary[b] - target) / 2.0;
    const int pieces = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < pieces; ++i) edges.push_back({pick(a), pick(b), connector / pieces});
    spent[a] += connector;
    spent[b] += connector;
  }

  // Light savable edges between blobs that are not partners.
  std::uniform_real_distribution<double> light(0.02 * c, 0.1 * c);
  for (int a = 0; a < blobs; ++a) {
    for (int b = a + 1; b < blobs; ++b) {
      if (partner[a] == b || rng() % 3 != 0) continue;
      const double w = light(rng);
      if (boundary[a] - spent[a] - w < 0.05 * c || boundary[b] - spent[b] - w < 0.05 * c) continue;
      edges.push_back({pick(a), pick(b), w});
      spent[a] += w;
      spent[b] += w;
    }
  }

  // The rest of every boundary goes to the core.
  for (int a = 0; a < blobs; ++a) {
    const double rest = boundary[a] - spent[a];
    if (rest <= 0.0) return std::nullopt;
    const int pieces = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < pieces; ++i) edges.push_back({pick(a), core_vertex(), rest / pieces});
  }

  WeightedGraph g(n, std::move(edges));
  std::vector<VertexSet> parts;
  for (int b = 0; b < blobs; ++b) {
    VertexSet s;
    for (int i = 0; i < p; ++i) s.push_back(blob_vertex(b, i));
    parts.push_back(std::move(s));
  }
  VertexSet core;
  for (Vertex v = 0; v < p; ++v) core.push_back(v);
  parts.push_back(std::move(core));

  if (std::abs(global_mincut(g).weight - c) > 1e-9) return std::nullopt;
  try {
    build_mincut_tree(g, eps1);
  } catch (const NotLaminar&) {
    return std::nullopt;
  }
  for (int b = 0; b < blobs; ++b) {
    if (boundary_weight(g, parts[b]) > (1.0 + eps1) * c + 1e-9) return std::nullopt;
  }
  auto planted = make_partition(g, std::move(parts));
  return PlantedInstance{std::move(g), std::move(planted), c};
}

}  // namespace

PlantedInstance gen_planted_laminar(int k, int n_per_part, double eps1, std::uint64_t seed) {
  if (k < 2) throw InvalidInput("planted_laminar needs k >= 2");
  if (n_per_part < 2) throw InvalidInput("planted_laminar needs at least 2 vertices per part");
  if (!(eps1 > 0.0 && eps1 < 0.25)) throw InvalidInput("planted_laminar needs eps1 in (0, 0.25)");
  if (static_cast<long>(k) * n_per_part > 24) {
    throw InvalidInput("planted_laminar self-check enumerates cuts; k * n_per_part must be <= 24");
  }
  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    const auto s = attempt == 0 ? seed : derive_seed(seed, attempt);
    if (auto inst = try_planted(k, n_per_part, eps1, s)) return std::move(*inst);
  }
  throw Error("planted_laminar self-check failed for 64 derived seeds");
}

WeightedGraph gen_random_gnp(Vertex n, double p, int w_min, int w_max, std::uint64_t seed,
                             int vertex_w_max) {
  if (n < 1) throw InvalidInput("random_gnp needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("random_gnp needs p in [0, 1]");
  if (w_min < 0 || w_max < w_min) throw InvalidInput("random_gnp needs 0 <= w_min <= w_max");
  if (vertex_w_max < 0) throw InvalidInput("random_gnp needs vertex_w_max >= 0");
  Rng rng(seed);
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<int> weight(w_min, w_max);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.push_back({i, j, static_cast<double>(weight(rng))});
    }
  }
  std::vector<double> vertex_weights;
  if (vertex_w_max > 0) {
    std::uniform_int_distribution<int> vw(0, vertex_w_max);
    for (Vertex v = 0; v < n; ++v) vertex_weights.push_back(vw(rng));
  }
  return WeightedGraph(n, std::move(edges), std::move(vertex_weights));
}

WeightedGraph gen_star_pvc(Vertex leaves, std::uint64_t seed) {
  if (leaves < 1) throw InvalidInput("star_pvc needs at least one leaf");
  Rng rng(seed);
  std::uniform_int_distribution<int> weight(1, 5);
  std::uniform_int_distribution<int> vw(0, 2);
  std::vector<Edge> edges;
  std::vector<double> vertex_weights(leaves + 1, 0.0);
  for (Vertex i = 1; i <= leaves; ++i) {
    edges.push_back({0, i, static_cast<double>(weight(rng))});
    vertex_weights[i] = vw(rng);
  }
  return WeightedGraph(leaves + 1, std::move(edges), std::move(vertex_weights));
}

}  // namespace kcut
