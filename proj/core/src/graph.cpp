#include "kpfree/graph.hpp"

#include <algorithm>
#include <string>

#include "kpfree/errors.hpp"

namespace kpfree {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw InputError("negative vertex count");
  const auto un = static_cast<std::size_t>(n);
  adj_list_.assign(un, {});
  adj_set_.assign(un, VertexSet(n));
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range for n=" +
                       std::to_string(n));
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (adj_set_[static_cast<std::size_t>(e.u)].contains(e.v)) continue;
    adj_set_[static_cast<std::size_t>(e.u)].insert(e.v);
    adj_set_[static_cast<std::size_t>(e.v)].insert(e.u);
    ++m_;
  }
  for (std::size_t v = 0; v < un; ++v) adj_list_[v] = adj_set_[v].members();
  build_degeneracy_order();
}

void Graph::build_degeneracy_order() {
  // Repeatedly remove a minimum-degree vertex (lowest id on ties).
  const auto un = static_cast<std::size_t>(n_);
  std::vector<int> deg(un);
  std::vector<bool> removed(un, false);
  for (std::size_t v = 0; v < un; ++v) deg[v] = static_cast<int>(adj_list_[v].size());
  position_.assign(un, 0);
  for (int step = 0; step < n_; ++step) {
    int best = -1;
    for (int v = 0; v < n_; ++v) {
      if (removed[static_cast<std::size_t>(v)]) continue;
      if (best == -1 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(best)]) best = v;
    }
    removed[static_cast<std::size_t>(best)] = true;
    position_[static_cast<std::size_t>(best)] = step;
    for (Vertex u : adj_list_[static_cast<std::size_t>(best)])
      if (!removed[static_cast<std::size_t>(u)]) --deg[static_cast<std::size_t>(u)];
  }
  forward_.assign(un, VertexSet(n_));
  for (std::size_t v = 0; v < un; ++v)
    for (Vertex u : adj_list_[v])
      if (position_[static_cast<std::size_t>(u)] > position_[v]) forward_[v].insert(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

GraphStats degree_stats(const Graph& g) {
  GraphStats s;
  if (g.order() == 0) return s;
  s.max_degree = 0;
  s.min_degree = g.order();
  for (Vertex v = 0; v < g.order(); ++v) {
    s.max_degree = std::max(s.max_degree, g.degree(v));
    s.min_degree = std::min(s.min_degree, g.degree(v));
  }
  return s;
}

int max_degree_within(const Graph& g, const VertexSet& within) {
  int best = 0;
  for (Vertex v : within) best = std::max(best, g.neighborhood(v).intersection_size(within));
  return best;
}

void require_universe(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw InputError("vertex set over universe " + std::to_string(s.universe()) + " used with a graph of order " +
                     std::to_string(g.order()));
}

VertexSet InducedSubgraph::lift(const VertexSet& local, int host_order) const {
  VertexSet out(host_order);
  for (Vertex v : local) out.insert(to_parent[static_cast<std::size_t>(v)]);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w) {
  require_universe(g, w);
  InducedSubgraph out;
  out.to_parent = w.members();
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i)
    local[static_cast<std::size_t>(out.to_parent[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (Vertex u : w)
    for (Vertex v : g.neighbors(u))
      if (u < v && w.contains(v))
        edges.push_back({local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(v)]});
  out.graph = Graph(static_cast<int>(out.to_parent.size()), edges);
  return out;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  require_universe(g, s);
  for (Vertex v : s)
    if (g.neighborhood(v).intersects(s)) return false;
  return true;
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
  require_universe(g, within);
  std::vector<VertexSet> out;
  VertexSet unseen = within;
  std::vector<Vertex> stack;
  while (!unseen.empty()) {
    VertexSet comp(g.order());
    const Vertex root = unseen.first();
    unseen.erase(root);
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.insert(v);
      for (Vertex u : g.neighbors(v)) {
        if (unseen.contains(u)) {
          unseen.erase(u);
          stack.push_back(u);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) { return connected_components(g, g.all()); }

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

}  // namespace kpfree
