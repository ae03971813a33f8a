#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "kcut/graph.hpp"

using namespace kcut;

TEST(WeightedGraph, MergesParallelEdgesAndDropsLoops) {
  WeightedGraph g(3, {{0, 1, 1.0}, {1, 0, 2.5}, {2, 2, 4.0}});
  ASSERT_EQ(g.num_edges(), 1U);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1, 3.5}));
  EXPECT_DOUBLE_EQ(g.weighted_degree(1), 3.5);
}

TEST(WeightedGraph, RejectsBadInput) {
  EXPECT_THROW(WeightedGraph(0, {}), InvalidInput);
  EXPECT_THROW(WeightedGraph(2, {{0, 2, 1.0}}), InvalidInput);
  EXPECT_THROW(WeightedGraph(2, {{0, 1, -1.0}}), InvalidInput);
  EXPECT_THROW(WeightedGraph(2, {}, {1.0, -2.0}), InvalidInput);
}

TEST(CutWeight, Examples) {
  const auto tri = fixtures::triangle();
  EXPECT_DOUBLE_EQ(cut_weight(tri, std::vector<VertexSet>{{0}, {1, 2}}), 2.0);
  EXPECT_DOUBLE_EQ(cut_weight(tri, std::vector<VertexSet>{{0, 1, 2}}), 0.0);
  EXPECT_DOUBLE_EQ(cut_weight(fixtures::path(3), std::vector<VertexSet>{{0}, {1}, {2}}), 2.0);
}

TEST(CutWeight, RejectsNonPartitions) {
  const auto tri = fixtures::triangle();
  EXPECT_THROW(make_partition(tri, {{0}, {1}}), InvalidInput);
  EXPECT_THROW(make_partition(tri, {{0, 1}, {1, 2}}), InvalidInput);
  EXPECT_THROW(make_partition(tri, {{0, 1, 2}, {}}), InvalidInput);
}

TEST(BoundaryWeight, Examples) {
  EXPECT_DOUBLE_EQ(boundary_weight(fixtures::triangle(), {0}), 2.0);
  EXPECT_DOUBLE_EQ(boundary_weight(fixtures::path(3), {0, 1}), 1.0);
  EXPECT_DOUBLE_EQ(boundary_weight(fixtures::star(3), {0}), 3.0);
  EXPECT_THROW(boundary_weight(fixtures::triangle(), {}), InvalidInput);
  EXPECT_THROW(boundary_weight(fixtures::triangle(), {0, 1, 2}), InvalidInput);
}

TEST(InducedSubgraph, Examples) {
  auto sub = induced_subgraph(fixtures::triangle(), {0, 1});
  ASSERT_EQ(sub.graph.num_vertices(), 2);
  ASSERT_EQ(sub.graph.num_edges(), 1U);
  EXPECT_EQ(sub.graph.edges()[0], (Edge{0, 1, 1.0}));

  const auto g = fixtures::g_star();
  EXPECT_TRUE(induced_subgraph(g, all_vertices(4)).graph == g);

  auto small = induced_subgraph(fixtures::two_clique(3), {0, 1, 2});
  EXPECT_TRUE(small.graph == fixtures::complete(3));
  EXPECT_THROW(induced_subgraph(g, {}), InvalidInput);
}

TEST(InducedSubgraph, KeepsVertexWeights) {
  WeightedGraph g(3, {{0, 2, 1.0}}, {1.0, 2.0, 3.0});
  auto sub = induced_subgraph(g, {1, 2});
  EXPECT_EQ(sub.graph.vertex_weights(), (std::vector<double>{2.0, 3.0}));
  EXPECT_EQ(sub.vertices, (VertexSet{1, 2}));
}

TEST(Contract, Examples) {
  auto c = contract(fixtures::path(3), {{0, 1}});
  ASSERT_EQ(c.graph.num_vertices(), 2);
  ASSERT_EQ(c.graph.num_edges(), 1U);
  EXPECT_DOUBLE_EQ(c.graph.edges()[0].w, 1.0);

  auto tri = contract(fixtures::triangle(), {{0, 1}});
  ASSERT_EQ(tri.graph.num_edges(), 1U);
  EXPECT_DOUBLE_EQ(tri.graph.edges()[0].w, 2.0);

  const auto g = fixtures::g_star();
  EXPECT_TRUE(contract(g, {}).graph == g);
  EXPECT_THROW(contract(g, {{0, 1}, {1, 2}}), InvalidInput);
}

TEST(Crosses, Examples) {
  auto cut = [](VertexSet s) { return Cut{std::move(s), 0.0}; };
  EXPECT_FALSE(crosses(cut({0}), cut({0, 1}), 4));
  EXPECT_TRUE(crosses(cut({0, 1}), cut({1, 2}), 4));
  EXPECT_FALSE(crosses(cut({0}), cut({1}), 4));
  EXPECT_FALSE(crosses(cut({0, 1}), cut({2, 3}), 4));
}

class GraphProperties : public ::testing::TestWithParam<int> {};

TEST_P(GraphProperties, CutWeightIsHalfBoundarySum) {
  std::mt19937_64 rng(GetParam());
  const Vertex n = 2 + static_cast<Vertex>(rng() % 8);
  const auto g = fixtures::random_graph(rng, n, 0.5);
  const int k = 1 + static_cast<int>(rng() % n);
  std::vector<VertexSet> parts(k);
  for (Vertex v = 0; v < k; ++v) parts[v].push_back(v);
  for (Vertex v = k; v < n; ++v) parts[rng() % k].push_back(v);
  const auto p = make_partition(g, parts);

  double half = 0.0;
  if (k > 1)
    for (const auto& s : p.parts) half += boundary_weight(g, s);
  EXPECT_NEAR(p.cut_weight, half / 2.0, 1e-9);

  auto shuffled = parts;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  EXPECT_NEAR(cut_weight(g, shuffled), p.cut_weight, 1e-9);
}

TEST_P(GraphProperties, ContractExpandRoundTrips) {
  std::mt19937_64 rng(GetParam());
  const Vertex n = 3 + static_cast<Vertex>(rng() % 8);
  const auto g = fixtures::random_graph(rng, n, 0.6);
  std::vector<int> group(n);
  for (auto& x : group) x = static_cast<int>(rng() % 4) - 1;
  std::vector<VertexSet> groups(3);
  for (Vertex v = 0; v < n; ++v)
    if (group[v] >= 0) groups[group[v]].push_back(v);
  std::erase_if(groups, [](const VertexSet& s) { return s.empty(); });
  const auto c = contract(g, groups);

  VertexSet seen;
  for (Vertex x = 0; x < c.graph.num_vertices(); ++x) {
    const auto members = expand(c, {x});
    if (x < static_cast<Vertex>(groups.size())) EXPECT_EQ(members, groups[x]);
    seen = set_union(seen, members);
  }
  EXPECT_EQ(seen, all_vertices(n));

  // A cut of the contracted graph has the weight of its expansion.
  if (c.graph.num_vertices() >= 2) {
    const VertexSet side{0};
    EXPECT_NEAR(boundary_weight(c.graph, side), boundary_weight(g, expand(c, side)), 1e-9);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, GraphProperties, ::testing::Range(0, 40));
