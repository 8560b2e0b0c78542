#include <gtest/gtest.h>

#include <vector>

#include "kpfree/errors.hpp"
#include "kpfree/generators.hpp"
#include "kpfree/graph.hpp"

using namespace kpfree;

TEST(Graph, DuplicateEdgesCollapse) {
  const std::vector<Edge> edges{{0, 1}, {1, 0}, {1, 2}, {0, 1}};
  const Graph g(3, edges);
  EXPECT_EQ(g.num_edges(), 2);
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(Graph, RejectsBadEdges) {
  const std::vector<Edge> loop{{2, 2}};
  const std::vector<Edge> range{{0, 3}};
  const std::vector<Edge> negative{{-1, 0}};
  EXPECT_THROW(Graph(3, loop), InputError);
  EXPECT_THROW(Graph(3, range), InputError);
  EXPECT_THROW(Graph(3, negative), InputError);
  EXPECT_THROW(Graph(-1, {}), InputError);
}

TEST(Graph, ForwardSetsPartitionEachEdgeOnce) {
  const Graph g = random_gnp(30, 0.3, 11);
  int total = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    total += g.forward(v).size();
    for (Vertex u : g.forward(v)) {
      EXPECT_TRUE(g.adjacent(u, v));
      EXPECT_FALSE(g.forward(u).contains(v));
    }
  }
  EXPECT_EQ(total, g.num_edges());
}

TEST(Graph, DegreeStats) {
  const GraphStats s = degree_stats(path_graph(5));
  EXPECT_EQ(s.max_degree, 2);
  EXPECT_EQ(s.min_degree, 1);
  const GraphStats e = degree_stats(Graph());
  EXPECT_EQ(e.max_degree, 0);
  EXPECT_EQ(e.min_degree, 0);
}

TEST(Graph, InducedSubgraphRenumbersAndLifts) {
  const Graph c = cycle_graph(6);
  const VertexSet w = VertexSet::of(6, {1, 2, 3, 5});
  const InducedSubgraph sub = induced_subgraph(c, w);
  EXPECT_EQ(sub.graph.order(), 4);
  EXPECT_EQ(sub.to_parent, (std::vector<Vertex>{1, 2, 3, 5}));
  EXPECT_EQ(sub.graph.num_edges(), 2);
  EXPECT_TRUE(sub.graph.adjacent(0, 1));
  EXPECT_TRUE(sub.graph.adjacent(1, 2));
  EXPECT_FALSE(sub.graph.adjacent(2, 3));
  EXPECT_EQ(sub.lift(VertexSet::of(4, {0, 3}), 6), VertexSet::of(6, {1, 5}));
  EXPECT_EQ(max_degree_within(c, w), 2);
}

TEST(Graph, IndependenceAndUniverseCheck) {
  const Graph c = cycle_graph(5);
  EXPECT_TRUE(is_independent(c, VertexSet::of(5, {0, 2})));
  EXPECT_FALSE(is_independent(c, VertexSet::of(5, {0, 4})));
  EXPECT_TRUE(is_independent(c, VertexSet(5)));
  EXPECT_THROW(is_independent(c, VertexSet(6)), InputError);
}

TEST(Graph, Components) {
  const Graph g = disjoint_union(cycle_graph(3), path_graph(2));
  const auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 2U);
  EXPECT_EQ(comps[0], VertexSet::of(5, {0, 1, 2}));
  EXPECT_EQ(comps[1], VertexSet::of(5, {3, 4}));
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(cycle_graph(7)));
  EXPECT_TRUE(is_connected(Graph()));
  const auto within = connected_components(cycle_graph(6), VertexSet::of(6, {0, 1, 3, 4}));
  EXPECT_EQ(within.size(), 2U);
}
