#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "kcut/io.hpp"

using namespace kcut;

namespace {

WeightedGraph parse(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

std::string dump(const WeightedGraph& g) {
  std::ostringstream out;
  write_graph(g, out);
  return out.str();
}

}  // namespace

TEST(GraphText, TriangleRoundTrips) {
  const auto g = fixtures::triangle();
  EXPECT_EQ(dump(g), "p cut 3 3\ne 0 1 1\ne 0 2 1\ne 1 2 1\n");
  EXPECT_EQ(parse(dump(g)), g);
}

TEST(GraphText, VertexLinesAndComments) {
  const auto g = parse(
      "# star\n"
      "p cut 3 2   # header\n"
      "e 0 1 2.5\n"
      "\n"
      "e 0 2 1\n"
      "v 1 3\n"
      "v 2 0.25\n");
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_DOUBLE_EQ(g.vertex_weight(0), 0.0);
  EXPECT_DOUBLE_EQ(g.vertex_weight(1), 3.0);
  EXPECT_DOUBLE_EQ(g.vertex_weight(2), 0.25);
  EXPECT_EQ(parse(dump(g)), g);
}

TEST(GraphText, Errors) {
  EXPECT_THROW(parse("e 0 1 1\n"), ParseError);
  EXPECT_THROW(parse("p cut 2\n"), ParseError);
  EXPECT_THROW(parse("p cup 2 1\ne 0 1 1\n"), ParseError);
  EXPECT_THROW(parse("p cut 2 1\ne 0 2 1\n"), ParseError);
  EXPECT_THROW(parse("p cut 2 1\ne 0 1 -1\n"), ParseError);
  EXPECT_THROW(parse("p cut 2 1\ne 0 1 x\n"), ParseError);
  EXPECT_THROW(parse("p cut 2 2\ne 0 1 1\n"), ParseError);
  EXPECT_THROW(parse("p cut 2 1\ne 0 1 1\nq 1\n"), ParseError);
  EXPECT_THROW(parse("p cut 2 0\nv 5 1\n"), ParseError);
  EXPECT_THROW(parse("p cut 0 0\n"), ParseError);
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(read_graph(std::string("/nonexistent/graph.txt")), InvalidInput);
}

TEST(GraphText, ErrorNamesLine) {
  try {
    parse("p cut 3 1\n\ne 0 7 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(GraphText, RandomWeightsRoundTripExactly) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> w(0.0, 1e3);
  for (int trial = 0; trial < 30; ++trial) {
    const Vertex n = 2 + trial % 9;
    std::vector<Edge> es;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 2) es.push_back({u, v, w(rng) / 7.0});
    std::vector<double> vw(n);
    for (auto& x : vw) x = rng() % 3 ? 0.0 : w(rng) / 3.0;
    const WeightedGraph g(n, es, vw);
    const auto back = parse(dump(g));
    ASSERT_EQ(back.num_edges(), g.num_edges());
    for (std::size_t i = 0; i < g.num_edges(); ++i) EXPECT_EQ(back.edges()[i].w, g.edges()[i].w);
    for (Vertex v = 0; v < n; ++v) EXPECT_EQ(back.vertex_weight(v), g.vertex_weight(v));
  }
}

TEST(PartitionText, SortedPartsOnePerLine) {
  const auto g = fixtures::path(5);
  std::ostringstream out;
  write_partition(make_partition(g, {{4, 2}, {3}, {1, 0}}), out);
  EXPECT_EQ(out.str(), "0 1\n2 4\n3\n");
}
