#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kpfree/graph.hpp"

namespace kpfree {

/// Stable vertex colors from iterated degree refinement (1-WL). Colors are
/// isomorphism-invariant: equal inputs up to relabeling give equal multisets.
std::vector<int> refine_colors(const Graph& g);

/// Backtracking isomorphism test with refinement prefilter. Returns map[a_vertex]
/// = b_vertex. Intended for n <= 64.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b);
bool are_isomorphic(const Graph& a, const Graph& b);

/// Canonical adjacency string: two graphs get equal strings iff isomorphic.
/// Cost grows with the product of refinement-cell factorials; meant for n <= 10.
std::string canonical_form(const Graph& g);

struct StrongProductWitness {
  int cycle_length = 0;
  int clique_size = 0;
  /// coords[v] = (cycle position, clique position) of vertex v.
  std::vector<std::pair<int, int>> coords;
};

/// Recognizes C_{2t+1} ⊠ K_m with 2t+1 >= 5, m >= 1.
std::optional<StrongProductWitness> match_odd_cycle_strong_product(const Graph& g);

}  // namespace kpfree
