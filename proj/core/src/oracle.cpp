#include "kpfree/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

#include "kpfree/errors.hpp"

namespace kpfree::oracle {
namespace {

using Mask = std::uint64_t;

constexpr Mask bit(Vertex v) { return Mask{1} << v; }
// Members strictly greater than v.
constexpr Mask above(Vertex v) { return ~((Mask{2} << v) - 1); }
Vertex lowest(Mask m) { return std::countr_zero(m); }
int count(Mask m) { return std::popcount(m); }

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex u : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= bit(u);
  return adj;
}

Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s) m |= bit(v);
  return m;
}

VertexSet to_set(Mask m, int n) {
  VertexSet s(n);
  for (; m != 0; m &= m - 1) s.insert(lowest(m));
  return s;
}

bool has_clique(const std::vector<Mask>& adj, Mask cand, int t) {
  if (t <= 0) return true;
  if (count(cand) < t) return false;
  if (t == 1) return true;
  for (Mask rest = cand; rest != 0; rest &= rest - 1) {
    const Vertex v = lowest(rest);
    if (has_clique(adj, cand & adj[static_cast<std::size_t>(v)] & above(v), t - 1)) return true;
  }
  return false;
}

std::uint64_t clique_count(const std::vector<Mask>& adj, Mask cand, int t) {
  if (t <= 0) return 1;
  if (t == 1) return static_cast<std::uint64_t>(count(cand));
  std::uint64_t total = 0;
  for (Mask rest = cand; rest != 0; rest &= rest - 1) {
    const Vertex v = lowest(rest);
    total += clique_count(adj, cand & adj[static_cast<std::size_t>(v)] & above(v), t - 1);
  }
  return total;
}

void require_mask_size(const Graph& g) {
  if (g.order() > 64) throw BudgetExceeded("oracle supports at most 64 vertices, got " + std::to_string(g.order()));
}

void require_cap(const Graph& g, int cap, const char* what) {
  require_mask_size(g);
  if (g.order() > cap)
    throw BudgetExceeded(std::string(what) + ": n=" + std::to_string(g.order()) + " exceeds the budget cap of " +
                         std::to_string(cap));
}

class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds cap)
      : cap_(cap), start_(std::chrono::steady_clock::now()) {}

  void tick(std::uint64_t nodes) const {
    if (cap_.count() == 0 || (nodes & 0xFFF) != 0) return;
    if (std::chrono::steady_clock::now() - start_ > cap_) throw BudgetExceeded("oracle time cap exceeded");
  }

 private:
  std::chrono::milliseconds cap_;
  std::chrono::steady_clock::time_point start_;
};

std::vector<Vertex> by_descending_degree(const Graph& g) {
  std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, std::span<const int> orders, const SearchBudget& budget, ExistsResult& out)
      : adj_(adjacency_masks(g)), orders_(orders.begin(), orders.end()), cls_(orders.size(), 0),
        deadline_(budget.time_cap), out_(out) {
    out_.vertex_order = by_descending_degree(g);
    out_.assignment.assign(static_cast<std::size_t>(g.order()), -1);
  }

  bool run() { return place(0); }

 private:
  bool place(std::size_t i) {
    if (i == out_.vertex_order.size()) return true;
    const Vertex v = out_.vertex_order[i];
    const Mask nbrs = adj_[static_cast<std::size_t>(v)];
    for (std::size_t c = 0; c < cls_.size(); ++c) {
      deadline_.tick(++out_.nodes);
      if (has_clique(adj_, nbrs & cls_[c], orders_[c] - 1)) continue;
      cls_[c] |= bit(v);
      out_.assignment[static_cast<std::size_t>(v)] = static_cast<int>(c);
      if (place(i + 1)) return true;
      cls_[c] &= ~bit(v);
    }
    out_.assignment[static_cast<std::size_t>(v)] = -1;
    return false;
  }

  std::vector<Mask> adj_;
  std::vector<int> orders_;
  std::vector<Mask> cls_;
  Deadline deadline_;
  ExistsResult& out_;
};

class MaxKpFreeSearch {
 public:
  MaxKpFreeSearch(const Graph& g, int p, const SearchBudget& budget, bool collect)
      : n_(g.order()), p_(p), adj_(adjacency_masks(g)), order_(by_descending_degree(g)),
        suffix_(order_.size() + 1, 0), deadline_(budget.time_cap), collect_(collect) {
    for (std::size_t i = order_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] | bit(order_[i]);
  }

  void run() { branch(0, 0, 0); }

  int best = -1;
  Mask witness = 0;
  std::uint64_t optimum_count = 0;
  std::uint64_t nodes = 0;
  std::vector<Mask> optima;

 private:
  // Greedy clique cover of `rem`; a K_p-free set meets each clique in <= p-1 vertices.
  int cover_bound(Mask rem) const {
    int bound = 0;
    while (rem != 0) {
      const Vertex v = lowest(rem);
      Mask clique = bit(v);
      Mask cand = rem & adj_[static_cast<std::size_t>(v)];
      while (cand != 0) {
        const Vertex u = lowest(cand);
        clique |= bit(u);
        cand &= adj_[static_cast<std::size_t>(u)];
      }
      rem &= ~clique;
      bound += std::min(count(clique), p_ - 1);
    }
    return bound;
  }

  void branch(std::size_t i, Mask chosen, int size) {
    deadline_.tick(++nodes);
    if (i == order_.size()) {
      if (size > best) {
        best = size;
        witness = chosen;
        optimum_count = 0;
        optima.clear();
      }
      if (size == best) {
        ++optimum_count;
        if (collect_) optima.push_back(chosen);
      }
      return;
    }
    if (size + cover_bound(suffix_[i]) < best) return;
    const Vertex v = order_[i];
    if (!has_clique(adj_, adj_[static_cast<std::size_t>(v)] & chosen, p_ - 1)) branch(i + 1, chosen | bit(v), size + 1);
    branch(i + 1, chosen, size);
  }

  int n_;
  int p_;
  std::vector<Mask> adj_;
  std::vector<Vertex> order_;
  std::vector<Mask> suffix_;
  Deadline deadline_;
  bool collect_;
};

class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, const SearchBudget& budget)
      : n_(g.order()), adj_(adjacency_masks(g)), color_(static_cast<std::size_t>(n_), -1),
        classes_(static_cast<std::size_t>(n_) + 1, 0), deadline_(budget.time_cap) {}

  ChromaticResult run() {
    ChromaticResult result;
    if (n_ == 0) return result;
    greedy_dsatur();
    lower_ = clique_lower_bound();
    if (lower_ < best_) {
      std::fill(color_.begin(), color_.end(), -1);
      std::fill(classes_.begin(), classes_.end(), 0);
      search(0, 0);
    }
    result.chromatic_number = best_;
    result.coloring = best_coloring_;
    result.nodes = nodes_;
    return result;
  }

 private:
  int saturation(Vertex v, int used) const {
    int s = 0;
    for (int c = 0; c < used; ++c)
      if ((adj_[static_cast<std::size_t>(v)] & classes_[static_cast<std::size_t>(c)]) != 0) ++s;
    return s;
  }

  Vertex pick(int used) const {
    Mask uncolored = 0;
    for (Vertex v = 0; v < n_; ++v)
      if (color_[static_cast<std::size_t>(v)] < 0) uncolored |= bit(v);
    Vertex best = -1;
    int best_sat = -1, best_deg = -1;
    for (Mask rest = uncolored; rest != 0; rest &= rest - 1) {
      const Vertex v = lowest(rest);
      const int sat = saturation(v, used);
      const int deg = count(adj_[static_cast<std::size_t>(v)] & uncolored);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  void assign(Vertex v, int c) {
    color_[static_cast<std::size_t>(v)] = c;
    classes_[static_cast<std::size_t>(c)] |= bit(v);
  }
  void unassign(Vertex v, int c) {
    color_[static_cast<std::size_t>(v)] = -1;
    classes_[static_cast<std::size_t>(c)] &= ~bit(v);
  }

  void greedy_dsatur() {
    int used = 0;
    for (int step = 0; step < n_; ++step) {
      const Vertex v = pick(used);
      int c = 0;
      while (c < used && (adj_[static_cast<std::size_t>(v)] & classes_[static_cast<std::size_t>(c)]) != 0) ++c;
      assign(v, c);
      used = std::max(used, c + 1);
    }
    best_ = used;
    best_coloring_ = color_;
  }

  int clique_lower_bound() const {
    int best = 0;
    // Plain exhaustive max clique with a size bound; n <= 26 keeps this cheap.
    auto grow = [&](auto&& self, Mask cand, int size) -> void {
      if (cand == 0) {
        best = std::max(best, size);
        return;
      }
      if (size + count(cand) <= best) return;
      for (Mask rest = cand; rest != 0; rest &= rest - 1) {
        const Vertex v = lowest(rest);
        if (size + count(cand & above(v)) + 1 <= best) return;
        self(self, cand & adj_[static_cast<std::size_t>(v)] & above(v), size + 1);
      }
    };
    grow(grow, n_ == 64 ? ~Mask{0} : (bit(n_) - 1), 0);
    return best;
  }

  void search(int colored, int used) {
    deadline_.tick(++nodes_);
    if (used >= best_ || best_ == lower_) return;
    if (colored == n_) {
      best_ = used;
      best_coloring_ = color_;
      return;
    }
    const Vertex v = pick(used);
    for (int c = 0; c < used; ++c) {
      if ((adj_[static_cast<std::size_t>(v)] & classes_[static_cast<std::size_t>(c)]) != 0) continue;
      assign(v, c);
      search(colored + 1, used);
      unassign(v, c);
      if (best_ == lower_) return;
    }
    if (used + 1 < best_) {
      assign(v, used);
      search(colored + 1, used + 1);
      unassign(v, used);
    }
  }

  int n_;
  std::vector<Mask> adj_;
  std::vector<int> color_;
  std::vector<Mask> classes_;
  Deadline deadline_;
  int best_ = 0;
  int lower_ = 0;
  std::vector<int> best_coloring_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::vector<VertexSet> ExistsResult::classes(int n, int k) const {
  std::vector<VertexSet> out(static_cast<std::size_t>(k), VertexSet(n));
  for (std::size_t v = 0; v < assignment.size(); ++v)
    if (assignment[v] >= 0) out[static_cast<std::size_t>(assignment[v])].insert(static_cast<Vertex>(v));
  return out;
}

ExistsResult exists_partition(const Graph& g, std::span<const int> orders, const SearchBudget& budget) {
  if (orders.empty()) throw InputError("exists_partition needs at least one class");
  for (int p : orders)
    if (p < 1) throw InputError("class orders must be >= 1");
  require_cap(g, orders.size() <= 2 ? budget.max_n_two_class : budget.max_n_multi_class, "exists_partition");
  ExistsResult result;
  PartitionSearch search(g, orders, budget, result);
  result.exists = search.run();
  if (!result.exists) result.assignment.clear();
  return result;
}

ExistsResult exists_partition(const Graph& g, const PartitionSpec& spec, const SearchBudget& budget) {
  return exists_partition(g, spec.parts(), budget);
}

MaxKpFreeResult exact_max_kpfree(const Graph& g, int p, const SearchBudget& budget) {
  if (p < 1) throw InputError("exact_max_kpfree needs p >= 1");
  require_cap(g, budget.max_n_branch_and_bound, "exact_max_kpfree");
  MaxKpFreeSearch search(g, p, budget, false);
  search.run();
  return {search.best, to_set(search.witness, g.order()), search.optimum_count, search.nodes};
}

std::vector<VertexSet> all_max_kpfree(const Graph& g, int p, const SearchBudget& budget) {
  if (p < 1) throw InputError("all_max_kpfree needs p >= 1");
  require_cap(g, budget.max_n_branch_and_bound, "all_max_kpfree");
  MaxKpFreeSearch search(g, p, budget, true);
  search.run();
  std::vector<VertexSet> out;
  for (Mask m : search.optima) out.push_back(to_set(m, g.order()));
  return out;
}

ChromaticResult exact_chromatic(const Graph& g, const SearchBudget& budget) {
  require_cap(g, budget.max_n_branch_and_bound, "exact_chromatic");
  ColoringSearch search(g, budget);
  return search.run();
}

std::vector<VertexSet> min_kp1_filter(const Graph& g, std::span<const VertexSet> candidates, int p) {
  if (candidates.empty()) throw InputError("min_kp1_filter needs at least one candidate");
  if (p < 2) throw InputError("min_kp1_filter needs p >= 2");
  require_mask_size(g);
  const auto adj = adjacency_masks(g);
  const int size = candidates.front().size();
  std::vector<std::uint64_t> counts;
  for (const VertexSet& c : candidates) {
    if (c.universe() != g.order()) throw InputError("candidate has the wrong universe");
    if (c.size() != size) throw InputError("candidates must all have the same size");
    const Mask m = to_mask(c);
    if (has_clique(adj, m, p)) throw InputError("candidate " + c.to_string() + " contains K_" + std::to_string(p));
    counts.push_back(clique_count(adj, m, p - 1));
  }
  const std::uint64_t best = *std::min_element(counts.begin(), counts.end());
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (counts[i] == best) out.push_back(candidates[i]);
  return out;
}

std::uint64_t count_cliques_mask(const Graph& g, const VertexSet& within, int t) {
  require_mask_size(g);
  if (within.universe() != g.order()) throw InputError("vertex set has the wrong universe");
  return clique_count(adjacency_masks(g), to_mask(within), t);
}

}  // namespace kpfree::oracle
