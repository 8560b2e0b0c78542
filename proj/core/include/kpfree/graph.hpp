#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kpfree/vertex_set.hpp"

namespace kpfree {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept twice: as sorted neighbor lists for iteration and as
/// bitsets for intersection. A degeneracy ordering is computed once at
/// construction; `forward(v)` holds the neighbors of v that come later in it,
/// which lets clique enumeration visit every clique exactly once.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate edges (in either
  /// orientation) collapse to one; self-loops and out-of-range ids throw
  /// InputError.
  Graph(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  int num_edges() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_list_[static_cast<std::size_t>(v)]; }
  const VertexSet& neighborhood(Vertex v) const { return adj_set_[static_cast<std::size_t>(v)]; }
  const VertexSet& forward(Vertex v) const { return forward_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_list_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(Vertex u, Vertex v) const { return adj_set_[static_cast<std::size_t>(u)].contains(v); }

  /// Position of each vertex in the degeneracy ordering.
  std::span<const int> degeneracy_position() const { return position_; }

  /// All edges with u < v, sorted.
  std::vector<Edge> edges() const;

  VertexSet all() const { return VertexSet::full(n_); }
  VertexSet empty_set() const { return VertexSet(n_); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_list_ == b.adj_list_; }

 private:
  void build_degeneracy_order();

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<Vertex>> adj_list_;
  std::vector<VertexSet> adj_set_;
  std::vector<VertexSet> forward_;
  std::vector<int> position_;
};

struct GraphStats {
  int max_degree = 0;
  int min_degree = 0;
  std::optional<int> clique_number;
  std::optional<int> independence_number;
  std::optional<int> chromatic_number;
};

/// Δ and δ only; the optional fields stay empty. The empty graph gives 0/0.
GraphStats degree_stats(const Graph& g);

/// Maximum degree of the induced subgraph H[within], without building it.
int max_degree_within(const Graph& g, const VertexSet& within);

struct InducedSubgraph {
  Graph graph;
  /// to_parent[i] is the vertex of the host graph that became vertex i.
  std::vector<Vertex> to_parent;

  /// Maps a vertex set of the subgraph back to host ids.
  VertexSet lift(const VertexSet& local, int host_order) const;
};

/// H[w], vertices renumbered in increasing order of their host ids.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w);

bool is_independent(const Graph& g, const VertexSet& s);

/// Connected components of H[within], each as a vertex set of the host,
/// ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within);
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Throws InputError unless `s` indexes into g's vertex range.
void require_universe(const Graph& g, const VertexSet& s);

}  // namespace kpfree
