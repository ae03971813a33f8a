#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "kcut/mincut_tree.hpp"

using namespace kcut;

namespace {

Node node_hosting(const CutTree& t, Vertex v) { return t.phi(v); }

}  // namespace

TEST(BuildMincutTree, PathIsAChain) {
  const auto t = build_mincut_tree(fixtures::path(4), 0.0);
  ASSERT_EQ(t.num_nodes(), 4);
  EXPECT_EQ(t.hosted(t.root()), (VertexSet{0}));
  // Each vertex's node hangs under the previous vertex's node.
  for (Vertex v = 1; v < 4; ++v) {
    EXPECT_EQ(t.parent(node_hosting(t, v)), node_hosting(t, v - 1));
    EXPECT_DOUBLE_EQ(t.edge_weight(node_hosting(t, v)), 1.0);
  }
}

TEST(BuildMincutTree, GStar) {
  const auto t = build_mincut_tree(fixtures::g_star(), 0.25);
  ASSERT_EQ(t.num_nodes(), 4);
  EXPECT_EQ(t.hosted(t.root()), (VertexSet{0}));
  const double expected[] = {0.0, 1.2, 1.2, 1.0};
  for (Vertex v = 1; v < 4; ++v) {
    const Node a = node_hosting(t, v);
    EXPECT_EQ(t.parent(a), t.root());
    EXPECT_EQ(t.hosted(a), (VertexSet{v}));
    EXPECT_DOUBLE_EQ(t.edge_weight(a), expected[v]);
  }
}

TEST(BuildMincutTree, TriangleIsAStarAroundAnEmptyNode) {
  const auto t = build_mincut_tree(fixtures::triangle(), 0.0);
  ASSERT_EQ(t.num_nodes(), 4);
  Node empty = -1;
  for (Node a = 0; a < 4; ++a)
    if (t.hosted(a).empty()) empty = a;
  ASSERT_GE(empty, 0);
  const auto star = t.reroot(empty);
  EXPECT_EQ(star.children(empty).size(), 3U);
  for (Node c : star.children(empty)) {
    EXPECT_EQ(star.hosted(c).size(), 1U);
    EXPECT_DOUBLE_EQ(star.edge_weight(c), 2.0);
  }
}

TEST(BuildMincutTree, CycleIsNotLaminar) {
  EXPECT_THROW(build_mincut_tree(fixtures::cycle(4), 0.0), NotLaminar);
}

TEST(CutTree, Accessors) {
  const auto t = build_mincut_tree(fixtures::path(4), 0.0);
  const Node leaf = t.phi(3);
  EXPECT_TRUE(t.children(leaf).empty());
  EXPECT_EQ(t.anc(leaf).size(), 3U);
  EXPECT_EQ(t.anc(leaf).back(), t.root());
  EXPECT_EQ(t.desc(t.root()).size(), 3U);
  EXPECT_EQ(t.subtree(leaf), (std::vector<Node>{leaf}));
  EXPECT_EQ(t.vertices_under(t.phi(2)), (VertexSet{2, 3}));
  EXPECT_TRUE(t.is_ancestor(t.root(), leaf));
  EXPECT_FALSE(t.is_ancestor(leaf, t.root()));
}

TEST(Saved, Examples) {
  const auto g = fixtures::g_star();
  const auto t = build_mincut_tree(g, 0.25);
  const Node nx = t.phi(1), ny = t.phi(2), nz = t.phi(3);
  EXPECT_DOUBLE_EQ(saved(g, t, {nx, ny}), 0.2);
  EXPECT_DOUBLE_EQ(saved(g, t, {nx}), 0.0);
  EXPECT_DOUBLE_EQ(saved(g, t, {nx, nz}), 0.0);
  EXPECT_THROW(saved(g, t, {t.root()}), InvalidInput);

  const auto chain = build_mincut_tree(fixtures::path(4), 0.0);
  EXPECT_THROW(saved(fixtures::path(4), chain, {chain.phi(1), chain.phi(2)}), InvalidInput);
}

TEST(PartitionFromSelection, Examples) {
  const auto g = fixtures::g_star();
  const auto t = build_mincut_tree(g, 0.25);
  const Node nx = t.phi(1), ny = t.phi(2), nz = t.phi(3);

  auto p = partition_from_selection(g, t, {nx, ny});
  EXPECT_EQ(p.parts, (std::vector<VertexSet>{{1}, {2}, {0, 3}}));
  EXPECT_NEAR(p.cut_weight, 2.2, 1e-12);

  auto all = partition_from_selection(g, t, {nx, ny, nz});
  EXPECT_NEAR(all.cut_weight, 3.2, 1e-12);

  const auto path = fixtures::path(4);
  const auto chain = build_mincut_tree(path, 0.0);
  auto c = partition_from_selection(path, chain, {chain.phi(3)});
  EXPECT_EQ(c.parts, (std::vector<VertexSet>{{3}, {0, 1, 2}}));
  EXPECT_DOUBLE_EQ(c.cut_weight, 1.0);

  // Around the vertex-free node of the triangle tree, its children cover V.
  const auto tri = fixtures::triangle();
  const auto tt = build_mincut_tree(tri, 0.0);
  const auto hub = tt.reroot(tt.parent(tt.phi(1)));
  EXPECT_THROW(partition_from_selection(tri, hub, hub.children(hub.root())), InvalidInput);
}

TEST(WriteTree, Format) {
  const auto t = build_mincut_tree(fixtures::path(3), 0.0);
  std::ostringstream out;
  write_tree(out, t);
  EXPECT_EQ(out.str(), "t 0 0 0\nt 1 0 1\nt 2 1 1\nm 0 0\nm 1 1\nm 2 2\n");
}

class TreeProperties : public ::testing::TestWithParam<int> {};

TEST_P(TreeProperties, TreeCutsEqualNearMincuts) {
  std::mt19937_64 rng(40 + GetParam());
  const Vertex n = 2 + static_cast<Vertex>(rng() % 9);
  const auto g = fixtures::random_graph(rng, n, 0.35, 1, 6);
  const double eps = std::vector<double>{0.0, 0.1, 0.3}[GetParam() % 3];

  const auto cuts = fixtures::all_cuts(g);
  double mc = std::numeric_limits<double>::infinity();
  for (const auto& [mask, w] : cuts) mc = std::min(mc, w);
  std::vector<std::pair<std::uint32_t, double>> near;
  for (const auto& c : cuts)
    if (c.second <= (1 + eps) * mc + 1e-9) near.push_back(c);
  bool crossing = false;
  for (const auto& a : near)
    for (const auto& b : near) {
      const auto i = a.first & b.first;
      if (i && i != a.first && i != b.first) crossing = true;
    }

  if (crossing) {
    EXPECT_THROW(build_mincut_tree(g, eps), NotLaminar);
    return;
  }
  const auto t = build_mincut_tree(g, eps);
  EXPECT_EQ(t.num_nodes(), static_cast<int>(near.size()) + 1);
  std::sort(near.begin(), near.end(), [](const auto& a, const auto& b) {
    return fixtures::mask_to_set(a.first) < fixtures::mask_to_set(b.first);
  });
  for (Node r = 0; r < t.num_nodes(); ++r) {
    const auto got = tree_cuts(g, t.reroot(r));
    ASSERT_EQ(got.size(), near.size());
    for (std::size_t i = 0; i < near.size(); ++i) {
      EXPECT_EQ(got[i].side, fixtures::mask_to_set(near[i].first));
      EXPECT_NEAR(got[i].weight, near[i].second, 1e-9);
      EXPECT_NEAR(got[i].weight, boundary_weight(g, got[i].side), 1e-9);
    }
  }
}

TEST_P(TreeProperties, SavedIdentity) {
  std::mt19937_64 rng(90 + GetParam());
  const Vertex n = 4 + static_cast<Vertex>(rng() % 8);
  // A star of heavy blobs is laminar at small epsilon.
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) es.push_back({0, v, 1.0 + 0.05 * static_cast<double>(rng() % 3)});
  for (int i = 0; i < 4; ++i) {
    const Vertex a = 1 + static_cast<Vertex>(rng() % (n - 1));
    const Vertex b = 1 + static_cast<Vertex>(rng() % (n - 1));
    if (a != b) es.push_back({a, b, 0.01 * static_cast<double>(1 + rng() % 5)});
  }
  const WeightedGraph g(n, es);
  CutTree t = [&] {
    try {
      return build_mincut_tree(g, 0.2);
    } catch (const NotLaminar&) {
      return build_mincut_tree(g, 0.0);
    }
  }();
  for (int trial = 0; trial < 20; ++trial) {
    const auto rooted = t.reroot(static_cast<Node>(rng() % t.num_nodes()));
    std::vector<Node> pick;
    for (Node a : rooted.preorder()) {
      if (a == rooted.root() || rng() % 3 != 0) continue;
      bool ok = true;
      for (Node b : pick) ok = ok && !rooted.is_ancestor(b, a);
      if (ok) pick.push_back(a);
    }
    if (pick.empty()) continue;
    double sum = 0.0;
    for (Node a : pick) sum += rooted.edge_weight(a);
    try {
      const auto p = partition_from_selection(g, rooted, pick);
      EXPECT_NEAR(p.cut_weight, sum - saved(g, rooted, pick), 1e-9);
    } catch (const InvalidInput&) {
      // Selection covered every vertex.
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, TreeProperties, ::testing::Range(0, 60));
