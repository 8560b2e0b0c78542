#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "kpfree/graph.hpp"

namespace kpfree {

struct Clique {
  VertexSet vertices;
  int order() const { return vertices.size(); }
};

struct CliqueReport {
  int order_queried = 0;
  std::uint64_t count = 0;
  /// At most the requested cap; the count is exact regardless.
  std::vector<Clique> witnesses;
};

inline constexpr std::size_t kDefaultWitnessCap = 1024;

/// Return false to stop the enumeration early.
using CliqueVisitor = std::function<bool(const VertexSet&)>;

/// Visits every t-clique of H[within] exactly once. Returns false if the
/// visitor stopped the walk.
bool for_each_clique(const Graph& g, const VertexSet& within, int t, const CliqueVisitor& visit);

/// Visits every maximal clique of H[within] (Bron-Kerbosch with pivoting).
void for_each_maximal_clique(const Graph& g, const VertexSet& within, const CliqueVisitor& visit);

CliqueReport count_cliques(const Graph& g, int t, std::size_t witness_cap = kDefaultWitnessCap);
std::uint64_t count_cliques_in(const Graph& g, const VertexSet& within, int t);

/// True iff H[within] has a clique of order t. Stops at the first one found.
bool contains_clique(const Graph& g, const VertexSet& within, int t);

/// True iff H[s] contains no K_p. For p = 2 this coincides with is_independent.
bool is_kp_free(const Graph& g, const VertexSet& s, int p);

/// All t-cliques of g that contain v.
std::vector<Clique> cliques_through_vertex(const Graph& g, Vertex v, int t);
/// All t-cliques of H[within ∪ {v}] that contain v.
std::vector<Clique> cliques_through_vertex(const Graph& g, const VertexSet& within, Vertex v, int t);
std::uint64_t count_cliques_through(const Graph& g, const VertexSet& within, Vertex v, int t);

/// A maximum clique; among several, the lexicographically smallest vertex set.
Clique max_clique(const Graph& g);
Clique max_clique_within(const Graph& g, const VertexSet& within);
int clique_number(const Graph& g);
int clique_number_within(const Graph& g, const VertexSet& within);

/// Every clique of order t in H[within], in enumeration order.
std::vector<VertexSet> list_cliques(const Graph& g, const VertexSet& within, int t);

}  // namespace kpfree
