#include <gtest/gtest.h>

#include <vector>

#include "kpfree/vertex_set.hpp"

using kpfree::Vertex;
using kpfree::VertexSet;

TEST(VertexSet, InsertEraseContains) {
  VertexSet s(130);
  EXPECT_TRUE(s.empty());
  s.insert(0);
  s.insert(64);
  s.insert(129);
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(64));
  EXPECT_FALSE(s.contains(63));
  EXPECT_FALSE(s.contains(-1));
  EXPECT_FALSE(s.contains(130));
  s.erase(64);
  EXPECT_FALSE(s.contains(64));
  EXPECT_EQ(s.members(), (std::vector<Vertex>{0, 129}));
}

TEST(VertexSet, IterationIsIncreasingAcrossWords) {
  const VertexSet s = VertexSet::of(200, {199, 3, 64, 65, 127, 128});
  std::vector<Vertex> seen(s.begin(), s.end());
  EXPECT_EQ(seen, (std::vector<Vertex>{3, 64, 65, 127, 128, 199}));
  EXPECT_EQ(s.first(), 3);
  EXPECT_EQ(s.next(65), 127);
  EXPECT_EQ(s.next(199), -1);
}

TEST(VertexSet, SetAlgebra) {
  const VertexSet a = VertexSet::of(10, {1, 2, 3, 7});
  const VertexSet b = VertexSet::of(10, {2, 7, 9});
  EXPECT_EQ((a & b), VertexSet::of(10, {2, 7}));
  EXPECT_EQ((a | b), VertexSet::of(10, {1, 2, 3, 7, 9}));
  EXPECT_EQ((a - b), VertexSet::of(10, {1, 3}));
  EXPECT_EQ(a.intersection_size(b), 2);
  EXPECT_TRUE(a.intersects(b));
  EXPECT_TRUE(VertexSet::of(10, {2, 7}).is_subset_of(b));
  EXPECT_FALSE(a.is_subset_of(b));
  EXPECT_EQ(a.complement(), VertexSet::of(10, {0, 4, 5, 6, 8, 9}));
  EXPECT_EQ(a.complement().complement(), a);
}

TEST(VertexSet, ClearThrough) {
  VertexSet s = VertexSet::full(140);
  s.clear_through(70);
  EXPECT_EQ(s.first(), 71);
  EXPECT_EQ(s.size(), 140 - 71);
  s.clear_through(63);
  EXPECT_EQ(s.first(), 71);
  s.clear_through(139);
  EXPECT_TRUE(s.empty());
}

TEST(VertexSet, LexOrderAndRendering) {
  EXPECT_TRUE(VertexSet::of(8, {0, 5}).lex_less(VertexSet::of(8, {1})));
  EXPECT_TRUE(VertexSet::of(8, {1}).lex_less(VertexSet::of(8, {1, 2})));
  EXPECT_FALSE(VertexSet::of(8, {1, 2}).lex_less(VertexSet::of(8, {1, 2})));
  EXPECT_EQ(VertexSet::of(8, {0, 3, 5}).to_string(), "{0,3,5}");
  EXPECT_EQ(VertexSet(4).to_string(), "{}");
}

TEST(VertexSet, FullOfZeroUniverseIsEmpty) {
  const VertexSet s = VertexSet::full(0);
  EXPECT_TRUE(s.empty());
  EXPECT_EQ(s.begin(), s.end());
}
