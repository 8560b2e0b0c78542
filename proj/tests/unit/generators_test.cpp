#include <gtest/gtest.h>

#include "kpfree/cliques.hpp"
#include "kpfree/errors.hpp"
#include "kpfree/generators.hpp"
#include "kpfree/isomorphism.hpp"
#include "naive.hpp"

using namespace kpfree;

TEST(Generators, BasicFamilies) {
  EXPECT_EQ(complete_graph(6).num_edges(), 15);
  EXPECT_EQ(cycle_graph(7).num_edges(), 7);
  EXPECT_EQ(path_graph(7).num_edges(), 6);
  EXPECT_EQ(empty_graph(4).num_edges(), 0);
  EXPECT_EQ(path_graph(0).order(), 0);
  EXPECT_THROW(cycle_graph(2), InputError);
  EXPECT_THROW(empty_graph(-1), InputError);
}

TEST(Generators, StrongProductDegreeLaw) {
  // deg(a, b) = (deg a + 1)(deg b + 1) - 1
  const Graph a = path_graph(4);
  const Graph b = cycle_graph(5);
  const Graph g = strong_product(a, b);
  ASSERT_EQ(g.order(), 20);
  for (Vertex i = 0; i < 4; ++i)
    for (Vertex j = 0; j < 5; ++j)
      EXPECT_EQ(g.degree(i * 5 + j), (a.degree(i) + 1) * (b.degree(j) + 1) - 1);
  EXPECT_THROW(strong_product(Graph(), b), InputError);
}

TEST(Generators, OddCycleTimesCompleteHasCliqueNumberTwiceM) {
  for (int len : {5, 7, 9}) {
    for (int m = 1; m <= 3; ++m) {
      const Graph g = strong_product(cycle_graph(len), complete_graph(m));
      EXPECT_EQ(clique_number(g), 2 * m) << "C" << len << " K" << m;
      EXPECT_EQ(degree_stats(g).max_degree, 3 * m - 1);
    }
  }
}

TEST(Generators, FigureGraph) {
  const Graph g = h1_figure();
  EXPECT_EQ(g.order(), 8);
  EXPECT_EQ(g.num_edges(), 16);
  for (Vertex v = 0; v < 8; ++v) EXPECT_EQ(g.degree(v), 4);
  EXPECT_TRUE(naive::is_clique(g, 0b111));
  EXPECT_EQ(naive::chromatic_number(g), 4);
}

TEST(Generators, PendantGraph) {
  const Graph g = h0_pendant();
  EXPECT_EQ(g.order(), 24);
  EXPECT_EQ(g.num_edges(), 28 + 16);
  for (Vertex v = 0; v < 8; ++v) EXPECT_EQ(g.degree(v), 9);
  for (Vertex v = 8; v < 24; ++v) {
    EXPECT_EQ(g.degree(v), 1);
    EXPECT_TRUE(g.adjacent(v, (v - 8) / 2));
  }
  EXPECT_EQ(clique_number(g), 8);
}

TEST(Generators, RandomModelsAreDeterministic) {
  EXPECT_EQ(random_gnp(25, 0.3, 9), random_gnp(25, 0.3, 9));
  EXPECT_NE(random_gnp(25, 0.3, 9), random_gnp(25, 0.3, 10));
  EXPECT_EQ(random_planted(20, 5, 2, 0.1, 4), random_planted(20, 5, 2, 0.1, 4));
  EXPECT_EQ(random_bounded_degree(20, 4, 0.7, 4), random_bounded_degree(20, 4, 0.7, 4));
  EXPECT_EQ(random_gnp(10, 0.0, 1).num_edges(), 0);
  EXPECT_EQ(random_gnp(10, 1.0, 1).num_edges(), 45);
  EXPECT_THROW(random_gnp(5, 1.5, 1), InputError);
}

TEST(Generators, PlantedCliqueIsPresent) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) EXPECT_GE(clique_number(random_planted(18, 6, 1, 0.05, seed)), 6);
  EXPECT_THROW(random_planted(5, 6, 1, 0.1, 1), InputError);
}

TEST(Generators, BoundedDegreeRespectsCap) {
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    EXPECT_LE(degree_stats(random_bounded_degree(30, 5, 0.8, seed)).max_degree, 5);
  EXPECT_THROW(random_bounded_degree(5, -1, 0.5, 1), InputError);
}

TEST(Generators, FamilyNamesAndFactors) {
  for (Family f : {Family::Complete, Family::Cycle, Family::Path, Family::StrongProduct, Family::H1Figure,
                   Family::H0Pendant, Family::Random, Family::Planted, Family::BoundedDegree})
    EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_FALSE(parse_family("petersen").has_value());
  const FamilySpec c7 = parse_factor("C7");
  EXPECT_EQ(c7.family, Family::Cycle);
  EXPECT_EQ(c7.n, 7);
  EXPECT_THROW(parse_factor("X3"), InputError);
  EXPECT_THROW(parse_factor("K"), InputError);
  EXPECT_THROW(parse_factor("Kx"), InputError);

  FamilySpec product;
  product.family = Family::StrongProduct;
  product.factors = {parse_factor("C5"), parse_factor("K2")};
  EXPECT_TRUE(are_isomorphic(generate(product), strong_product(cycle_graph(5), complete_graph(2))));
  product.factors.pop_back();
  EXPECT_THROW(generate(product), InputError);
}

TEST(Generators, OmegaConstraint) {
  using K = OmegaConstraint::Kind;
  EXPECT_TRUE((OmegaConstraint{K::AtMostDeltaMinus, 1}.admits(5, 6)));
  EXPECT_FALSE((OmegaConstraint{K::AtMostDeltaMinus, 1}.admits(6, 6)));
  EXPECT_TRUE((OmegaConstraint{K::Exactly, 4}.admits(4, 9)));
  EXPECT_TRUE((OmegaConstraint{K::TwoThirdsBound, 0}.admits(4, 5)));
  EXPECT_FALSE((OmegaConstraint{K::TwoThirdsBound, 0}.admits(3, 5)));
}

TEST(Generators, CorpusIsDeterministicAndFiltered) {
  CorpusRequest req;
  req.n_min = 10;
  req.n_max = 14;
  req.delta_min = 6;
  req.omega = {OmegaConstraint::Kind::AtMostDeltaMinus, 1};
  req.count = 20;
  req.seed = 31;
  const CorpusResult a = generate_corpus(req);
  const CorpusResult b = generate_corpus(req);
  ASSERT_EQ(a.entries.size(), 20U);
  EXPECT_FALSE(a.shortfall);
  EXPECT_EQ(a.attempts, b.attempts);
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    const CorpusEntry& e = a.entries[i];
    EXPECT_EQ(e.graph, b.entries[i].graph);
    EXPECT_TRUE(is_connected(e.graph));
    EXPECT_GE(e.graph.order(), 10);
    EXPECT_LE(e.graph.order(), 14);
    EXPECT_EQ(e.max_degree, degree_stats(e.graph).max_degree);
    EXPECT_EQ(e.clique_number, clique_number(e.graph));
    EXPECT_GE(e.max_degree, 6);
    EXPECT_LE(e.clique_number, e.max_degree - 1);
  }
}

TEST(Generators, CorpusReportsShortfall) {
  CorpusRequest req;
  req.n_min = 5;
  req.n_max = 5;
  req.delta_min = 10;
  req.count = 3;
  req.max_attempts = 50;
  const CorpusResult r = generate_corpus(req);
  EXPECT_TRUE(r.entries.empty());
  EXPECT_TRUE(r.shortfall);
  EXPECT_EQ(r.attempts, 50U);
}
