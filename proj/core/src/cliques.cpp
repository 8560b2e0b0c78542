#include "kpfree/cliques.hpp"

#include <string>

#include "kpfree/errors.hpp"

namespace kpfree {
namespace {

void require_order(int t) {
  if (t < 1) throw InputError("clique order must be >= 1, got " + std::to_string(t));
}

// Depth-first walk over forward neighborhoods of the degeneracy ordering.
// Buffers are allocated once per walk, one candidate set per depth.
class CliqueWalker {
 public:
  CliqueWalker(const Graph& g, int t, const CliqueVisitor& visit)
      : g_(g), t_(t), visit_(visit), current_(g.order()), cand_(static_cast<std::size_t>(t) + 1, VertexSet(g.order())) {}

  bool run(const VertexSet& within) {
    cand_[0] = within;
    return descend(0);
  }

 private:
  bool descend(int depth) {
    if (depth == t_) return visit_(current_);
    const VertexSet& cand = cand_[static_cast<std::size_t>(depth)];
    if (cand.size() < t_ - depth) return true;
    VertexSet& next = cand_[static_cast<std::size_t>(depth) + 1];
    for (Vertex v : cand) {
      next.assign_intersection(cand, g_.forward(v));
      current_.insert(v);
      const bool keep_going = descend(depth + 1);
      current_.erase(v);
      if (!keep_going) return false;
    }
    return true;
  }

  const Graph& g_;
  int t_;
  const CliqueVisitor& visit_;
  VertexSet current_;
  std::vector<VertexSet> cand_;
};

// Bron-Kerbosch with Tomita pivoting. With `bound` set, branches that cannot
// reach `*bound` vertices are cut.
class MaximalCliqueWalker {
 public:
  MaximalCliqueWalker(const Graph& g, const CliqueVisitor& visit, const int* bound)
      : g_(g), visit_(visit), bound_(bound) {}

  bool run(const VertexSet& within) {
    VertexSet r(g_.order());
    return expand(r, within, VertexSet(g_.order()));
  }

 private:
  bool expand(VertexSet& r, VertexSet p, VertexSet x) {
    if (p.empty() && x.empty()) return visit_(r);
    if (bound_ != nullptr && r.size() + p.size() < *bound_) return true;
    Vertex pivot = -1;
    int best = -1;
    for (const VertexSet* side : {&p, &x}) {
      for (Vertex u : *side) {
        const int c = p.intersection_size(g_.neighborhood(u));
        if (c > best) {
          best = c;
          pivot = u;
        }
      }
    }
    const VertexSet branch = p - g_.neighborhood(pivot);
    for (Vertex v : branch) {
      r.insert(v);
      const bool keep_going = expand(r, p & g_.neighborhood(v), x & g_.neighborhood(v));
      r.erase(v);
      if (!keep_going) return false;
      p.erase(v);
      x.insert(v);
    }
    return true;
  }

  const Graph& g_;
  const CliqueVisitor& visit_;
  const int* bound_;
};

}  // namespace

bool for_each_clique(const Graph& g, const VertexSet& within, int t, const CliqueVisitor& visit) {
  require_universe(g, within);
  require_order(t);
  CliqueWalker walker(g, t, visit);
  return walker.run(within);
}

void for_each_maximal_clique(const Graph& g, const VertexSet& within, const CliqueVisitor& visit) {
  require_universe(g, within);
  MaximalCliqueWalker walker(g, visit, nullptr);
  walker.run(within);
}

CliqueReport count_cliques(const Graph& g, int t, std::size_t witness_cap) {
  require_order(t);
  CliqueReport report;
  report.order_queried = t;
  if (t > g.order()) return report;
  for_each_clique(g, g.all(), t, [&](const VertexSet& c) {
    ++report.count;
    if (report.witnesses.size() < witness_cap) report.witnesses.push_back({c});
    return true;
  });
  return report;
}

std::uint64_t count_cliques_in(const Graph& g, const VertexSet& within, int t) {
  std::uint64_t count = 0;
  for_each_clique(g, within, t, [&](const VertexSet&) {
    ++count;
    return true;
  });
  return count;
}

bool contains_clique(const Graph& g, const VertexSet& within, int t) {
  if (t <= 0) return true;
  bool found = false;
  for_each_clique(g, within, t, [&](const VertexSet&) {
    found = true;
    return false;
  });
  return found;
}

bool is_kp_free(const Graph& g, const VertexSet& s, int p) {
  if (p < 2) throw InputError("is_kp_free needs p >= 2");
  return !contains_clique(g, s, p);
}

std::vector<Clique> cliques_through_vertex(const Graph& g, Vertex v, int t) {
  return cliques_through_vertex(g, g.all(), v, t);
}

std::vector<Clique> cliques_through_vertex(const Graph& g, const VertexSet& within, Vertex v, int t) {
  require_universe(g, within);
  require_order(t);
  if (v < 0 || v >= g.order()) throw InputError("vertex " + std::to_string(v) + " out of range");
  std::vector<Clique> out;
  if (t == 1) {
    out.push_back({VertexSet::of(g.order(), {v})});
    return out;
  }
  VertexSet nbrs = g.neighborhood(v) & within;
  for_each_clique(g, nbrs, t - 1, [&](const VertexSet& c) {
    VertexSet k = c;
    k.insert(v);
    out.push_back({std::move(k)});
    return true;
  });
  return out;
}

std::uint64_t count_cliques_through(const Graph& g, const VertexSet& within, Vertex v, int t) {
  require_order(t);
  if (t == 1) return 1;
  return count_cliques_in(g, g.neighborhood(v) & within, t - 1);
}

Clique max_clique_within(const Graph& g, const VertexSet& within) {
  require_universe(g, within);
  Clique best{VertexSet(g.order())};
  int best_order = 0;
  const CliqueVisitor keep = [&](const VertexSet& c) {
    const int k = c.size();
    if (k > best_order || (k == best_order && c.lex_less(best.vertices))) {
      best.vertices = c;
      best_order = k;
    }
    return true;
  };
  MaximalCliqueWalker walker(g, keep, &best_order);
  walker.run(within);
  return best;
}

Clique max_clique(const Graph& g) { return max_clique_within(g, g.all()); }

int clique_number_within(const Graph& g, const VertexSet& within) { return max_clique_within(g, within).order(); }

int clique_number(const Graph& g) { return clique_number_within(g, g.all()); }

std::vector<VertexSet> list_cliques(const Graph& g, const VertexSet& within, int t) {
  std::vector<VertexSet> out;
  for_each_clique(g, within, t, [&](const VertexSet& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

}  // namespace kpfree
