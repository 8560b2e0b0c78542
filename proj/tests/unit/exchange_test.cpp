#include <gtest/gtest.h>

#include <algorithm>

#include "kpfree/cliques.hpp"
#include "kpfree/errors.hpp"
#include "kpfree/exchange.hpp"
#include "kpfree/generators.hpp"
#include "kpfree/oracle.hpp"
#include "kpfree/partitioner.hpp"
#include "kpfree/rng.hpp"

using namespace kpfree;

namespace {

// Twelve vertices, max degree 5, ω = 3. The maximum triangle-free set below
// has the fewest edges among all maximum ones, yet vertex 0 of its complement
// admits no swap that keeps the edge count.
Graph stubborn_graph() {
  const std::vector<Edge> edges{{0, 2},  {0, 6}, {0, 8},  {0, 9},   {0, 11}, {1, 3},  {1, 4},
                                {1, 6},  {2, 9}, {3, 5},  {4, 7},   {4, 11}, {5, 8},  {5, 10},
                                {6, 8},  {6, 10}, {7, 11}, {8, 10}, {8, 11}, {10, 11}};
  return Graph(12, edges);
}

VertexSet stubborn_seed() { return VertexSet::of(12, {1, 2, 3, 4, 5, 6, 7, 9, 10}); }

void expect_trace_invariants(const Graph& g, const ExchangeTrace& t, const VertexSet& final_s) {
  EXPECT_EQ(final_s.size(), t.seed.size());
  EXPECT_FALSE(contains_clique(g, final_s, t.p));
  EXPECT_EQ(count_cliques_in(g, final_s, t.p - 1), t.seed_kp1_count);
  for (const SwapRecord& r : t.swaps) {
    EXPECT_EQ(r.kp1_count, t.seed_kp1_count);
    EXPECT_GE(r.a_v.size(), t.p - 1);
    EXPECT_TRUE(r.a_v.contains(r.v));
    EXPECT_TRUE(r.a_v.contains(r.y));
    if (r.min_overlap != -1) {
      EXPECT_GE(r.min_overlap, t.q - 2);
    }
  }
  EXPECT_EQ(t.complement_kq_free, !contains_clique(g, final_s.complement(), t.q));
}

}  // namespace

TEST(ExchangeState, SeedMustBeKpFree) {
  const Graph k4 = complete_graph(4);
  EXPECT_THROW(ExchangeState(k4, k4.all(), 4, 2, 10), ContractViolation);
  EXPECT_THROW(ExchangeState(k4, VertexSet(4), 1, 2, 10), InputError);
  EXPECT_THROW(ExchangeState(k4, VertexSet(5), 4, 2, 10), InputError);
}

TEST(ExchangeState, BuildAIsTheCommonCore) {
  // Vertex 4 closes two triangles with S = {0,1,2}: {4,0,1} and {4,1,2}.
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {4, 0}, {4, 1}, {4, 2}, {3, 4}};
  const Graph g(5, edges);
  const ExchangeState st(g, VertexSet::of(5, {0, 1, 2}), 3, 2, 10);
  EXPECT_EQ(st.kp1_count(), 2U);
  EXPECT_EQ(st.kq_count(), 1U);
  EXPECT_EQ(st.build_A(4), VertexSet::of(5, {1, 4}));
  EXPECT_THROW(st.build_A(0), InputError);
}

TEST(ExchangeState, BuildAContractFailures) {
  // Too few neighbours in S.
  const Graph path = path_graph(3);
  EXPECT_THROW(ExchangeState(path, VertexSet::of(3, {0}), 3, 2, 10).build_A(1), ContractViolation);
  // Enough neighbours but no p-clique through v.
  const std::vector<Edge> star{{2, 0}, {2, 1}};
  EXPECT_THROW(ExchangeState(Graph(3, star), VertexSet::of(3, {0, 1}), 3, 2, 10).build_A(2), ContractViolation);
  // Two triangles through v meeting only in v: |A| = 1 < p-1.
  const std::vector<Edge> bowtie{{0, 1}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}};
  EXPECT_THROW(ExchangeState(Graph(5, bowtie), VertexSet::of(5, {0, 1, 2, 3}), 3, 2, 10).build_A(4),
               ContractViolation);
}

TEST(ExchangeState, BuildBBranches) {
  // One copy of K_2 through y: B is that edge.
  const Graph p3 = path_graph(3);
  const ExchangeState a(p3, VertexSet(3), 3, 2, 10);
  EXPECT_EQ(a.build_B(0), VertexSet::of(3, {0, 1}));
  // Two copies: their intersection.
  EXPECT_EQ(a.build_B(1), VertexSet::of(3, {1}));
  // q copies inside a K_{q+1} component: the closed neighbourhood.
  const Graph k4 = complete_graph(4);
  const ExchangeState b(k4, VertexSet(4), 5, 3, 10);
  EXPECT_EQ(b.build_B(2), k4.all());
  // More than two copies without such a component.
  const Graph k5 = complete_graph(5);
  EXPECT_THROW(ExchangeState(k5, VertexSet(5), 6, 3, 10).build_B(0), ContractViolation);
  // y in no copy at all.
  const Graph lone = empty_graph(2);
  EXPECT_THROW(ExchangeState(lone, VertexSet(2), 3, 2, 10).build_B(0), ContractViolation);
}

TEST(ExchangeState, SwapKeepsCountsOrThrows) {
  // S = {0,1} on a 4-cycle; swapping 3 for 1 keeps one edge in S.
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  const Graph c4(4, edges);
  ExchangeState st(c4, VertexSet::of(4, {0, 1}), 3, 2, 10);
  EXPECT_EQ(st.kp1_after_swap(3, 1), 1U);
  st.swap(3, 1, {});
  EXPECT_EQ(st.s(), VertexSet::of(4, {0, 3}));
  EXPECT_EQ(st.history().size(), 1U);
  EXPECT_EQ(st.history().front().kp1_count, 1U);
  EXPECT_THROW(st.swap(0, 1, {}), ContractViolation);
  // Swapping to an independent pair changes #K_2.
  ExchangeState other(c4, VertexSet::of(4, {0, 1}), 3, 2, 10);
  EXPECT_THROW(other.swap(2, 1, {}), ContractViolation);
}

TEST(Exchange, StubbornSeedIsInTheFamily) {
  const Graph g = stubborn_graph();
  EXPECT_EQ(degree_stats(g).max_degree, 5);
  EXPECT_EQ(clique_number(g), 3);
  const auto family = maximum_kpfree_family(g, 3);
  ASSERT_FALSE(family.empty());
  EXPECT_EQ(family.front().size(), 9);
  const auto best = oracle::min_kp1_filter(g, family, 3);
  EXPECT_NE(std::find(best.begin(), best.end(), stubborn_seed()), best.end());
  EXPECT_EQ(count_cliques_in(g, stubborn_seed(), 2), 8U);
  EXPECT_EQ(count_cliques_in(g, stubborn_seed().complement(), 3), 1U);
}

TEST(Exchange, SomeVertexOfTheComplementAdmitsNoSwap) {
  const Graph g = stubborn_graph();
  const ExchangeState st(g, stubborn_seed(), 3, 3, 36);
  EXPECT_EQ(st.build_A(0), VertexSet::of(12, {0, 2, 9}));
  EXPECT_EQ(st.kp1_after_swap(0, 2), 9U);
  EXPECT_EQ(st.kp1_after_swap(0, 9), 9U);
}

TEST(Exchange, LoopRoutesAroundTheStubbornVertex) {
  const Graph g = stubborn_graph();
  const auto out = run_exchange(g, stubborn_seed(), 3, 3, 36);
  EXPECT_TRUE(out.trace.complement_kq_free);
  EXPECT_FALSE(out.trace.stalled);
  ASSERT_FALSE(out.trace.swaps.empty());
  EXPECT_NE(out.trace.swaps.front().v, 0);
  const bool noted = std::any_of(out.trace.events.begin(), out.trace.events.end(),
                                 [](const std::string& e) { return e.find("v=0") != std::string::npos; });
  EXPECT_TRUE(noted);
  expect_trace_invariants(g, out.trace, out.s);
}

TEST(Exchange, AlreadyFreeComplementMakesNoSwaps) {
  const Graph g = complete_graph(4);
  for (const VertexSet& s : maximum_kpfree_family(g, 4)) {
    const auto out = run_exchange(g, s, 4, 2, 8);
    EXPECT_TRUE(out.trace.swaps.empty());
    EXPECT_TRUE(out.trace.complement_kq_free);
    EXPECT_EQ(out.s, s);
  }
}

TEST(Exchange, RandomFamilySeedsKeepInvariants) {
  int exercised = 0;
  for (std::uint64_t i = 0; i < 4000 && exercised < 3; ++i) {
    Rng rng(derive_seed(1234, i));
    const int n = rng.uniform_int(8, 12);
    const Graph g = random_bounded_degree(n, 5, rng.uniform_real(0.5, 0.9), rng.bits());
    if (!is_connected(g) || degree_stats(g).max_degree != 5) continue;
    const int p = clique_number(g);
    const int q = 6 - p;
    if (p < 3 || q < 3) continue;
    const auto family = maximum_kpfree_family(g, p);
    for (const VertexSet& s : oracle::min_kp1_filter(g, family, p)) {
      if (!contains_clique(g, s.complement(), q)) continue;
      const auto out = run_exchange(g, s, p, q, n * q);
      expect_trace_invariants(g, out.trace, out.s);
      ++exercised;
    }
  }
  EXPECT_GE(exercised, 1);
}
