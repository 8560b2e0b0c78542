#pragma once

#include <climits>
#include <string>
#include <vector>

#include "kpfree/graph.hpp"

namespace kpfree {

/// Bounds that survive vertex deletion, so they can prune the generation tree.
struct HereditaryFilter {
  int max_degree = INT_MAX;
  int max_clique = INT_MAX;
};

struct EnumeratedGraph {
  Graph graph;
  std::string canonical;
};

/// One entry per isomorphism class of graphs on exactly n vertices meeting the
/// filter, sorted by canonical form. Built by extending every class on n-1
/// vertices with a new vertex in all admissible ways and deduplicating.
/// levels[i] holds the graphs on i vertices, i = 0..n_max.
std::vector<std::vector<EnumeratedGraph>> enumerate_graphs(int n_max, const HereditaryFilter& filter = {});

}  // namespace kpfree
