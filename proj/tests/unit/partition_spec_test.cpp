#include <gtest/gtest.h>

#include "kpfree/errors.hpp"
#include "kpfree/generators.hpp"
#include "kpfree/partition.hpp"

using namespace kpfree;

TEST(PartitionSpec, ParseAndRender) {
  const PartitionSpec s = PartitionSpec::parse("4, 3,2");
  EXPECT_EQ(s.k(), 3);
  EXPECT_EQ(s.sum(), 9);
  EXPECT_EQ(s.matching_max_degree(), 7);
  EXPECT_EQ(s.to_string(), "4,3,2");
  EXPECT_EQ(PartitionSpec::parse(s.to_string()), s);
}

TEST(PartitionSpec, RejectsMalformed) {
  EXPECT_THROW(PartitionSpec({}), InputError);
  EXPECT_THROW(PartitionSpec({3, 4}), InputError);
  EXPECT_THROW(PartitionSpec({3, 1}), InputError);
  EXPECT_THROW(PartitionSpec::parse(""), InputError);
  EXPECT_THROW(PartitionSpec::parse("4,"), InputError);
  EXPECT_THROW(PartitionSpec::parse("4,x"), InputError);
}

TEST(PartitionSpec, ValidityAgainstMaxDegree) {
  const Graph h1 = h1_figure();  // 4-regular
  EXPECT_TRUE(PartitionSpec({3, 2}).valid_for(h1));
  EXPECT_TRUE(PartitionSpec({2, 2, 2}).valid_for(h1));
  EXPECT_FALSE(PartitionSpec({3, 3}).valid_for(h1));
  const Graph h0 = h0_pendant();  // max degree 9
  EXPECT_TRUE(PartitionSpec({4, 4, 3}).valid_for(h0));
  EXPECT_FALSE(PartitionSpec({4, 4, 2}).valid_for(h0));
}

TEST(PartitionCheck, ReportsEachKindOfProblem) {
  const Graph k4 = complete_graph(4);
  const std::vector<int> orders{3, 2};
  const std::vector<VertexSet> edge_class{VertexSet::of(4, {0, 1}), VertexSet::of(4, {2, 3})};
  EXPECT_TRUE(check_partition(k4, orders, edge_class).has_value());  // {2,3} is an edge
  const std::vector<VertexSet> valid{VertexSet::of(4, {0, 1, 2}), VertexSet::of(4, {3})};
  EXPECT_TRUE(check_partition(k4, orders, valid).has_value());  // triangle in class 0
  const std::vector<int> roomy{4, 2};
  EXPECT_FALSE(check_partition(k4, roomy, valid).has_value());
  const std::vector<VertexSet> overlap{VertexSet::of(4, {0, 1, 2}), VertexSet::of(4, {2, 3})};
  EXPECT_TRUE(check_partition(k4, roomy, overlap).has_value());
  const std::vector<VertexSet> missing{VertexSet::of(4, {0, 1}), VertexSet::of(4, {3})};
  EXPECT_TRUE(check_partition(k4, roomy, missing).has_value());

  Partition p{roomy, valid, {}};
  certify(k4, p);
  EXPECT_TRUE(p.meta.certified);
  EXPECT_EQ(p.class_of(), (std::vector<int>{0, 0, 0, 1}));
  Partition bad{orders, valid, {}};
  EXPECT_THROW(certify(k4, bad), CertificationFailure);
}
