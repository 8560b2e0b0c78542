#include "kpfree/partitioner.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include "kpfree/cliques.hpp"
#include "kpfree/errors.hpp"
#include "kpfree/hitting.hpp"
#include "kpfree/isomorphism.hpp"

namespace kpfree {
namespace {

// Thrown inside a split when a constructive step and its local exact fallback
// both fail; the caller retries with exact search on the whole graph.
struct BranchFailure {
  std::string why;
};

struct GraphFacts {
  int max_degree = 0;
  int clique_number = 0;
};

GraphFacts facts(const Graph& g) { return {degree_stats(g).max_degree, clique_number(g)}; }

std::string num(long long x) { return std::to_string(x); }

class Splitter {
 public:
  Splitter(const Graph& g, const PartitionOptions& options, PartitionMeta& meta)
      : g_(g), options_(options), meta_(meta) {}

  std::vector<VertexSet> split_k(const VertexSet& w, std::span<const int> parts) {
    const auto k = parts.size();
    if (k == 1) {
      if (contains_clique(g_, w, parts[0])) throw BranchFailure{"last class still contains K_" + num(parts[0])};
      return {w};
    }
    int p = 0;
    for (std::size_t i = 0; i + 1 < k; ++i) p += parts[i];
    p -= static_cast<int>(k) - 2;
    const int q = parts[k - 1];
    auto [v1, v2] = split_two(w, p, q);
    // Grow the peeled class to a maximal K_q-free set.
    for (Vertex v : w) {
      if (!v1.contains(v)) continue;
      if (!contains_clique(g_, g_.neighborhood(v) & v2, q - 1)) {
        v1.erase(v);
        v2.insert(v);
      }
    }
    auto classes = split_k(v1, parts.first(k - 1));
    classes.push_back(std::move(v2));
    return classes;
  }

  std::pair<VertexSet, VertexSet> split_two(const VertexSet& w, int p, int q) {
    VertexSet v1 = g_.empty_set();
    VertexSet v2 = g_.empty_set();
    for (const VertexSet& c : connected_components(g_, w)) {
      auto [a, b] = split_component(c, p, q);
      if (contains_clique(g_, a, p) || contains_clique(g_, b, q)) {
        note("step output invalid on " + c.to_string() + ", exact search");
        std::tie(a, b) = exact_two(c, p, q);
      }
      v1 |= a;
      v2 |= b;
    }
    return {std::move(v1), std::move(v2)};
  }

  std::vector<VertexSet> exact(const VertexSet& w, std::span<const int> orders, const std::string& why) {
    meta_.fallback_used = true;
    ++meta_.fallback_count;
    note("exact search on " + num(w.size()) + " vertices: " + why);
    const InducedSubgraph sub = induced_subgraph(g_, w);
    oracle::ExistsResult r;
    try {
      r = oracle::exists_partition(sub.graph, orders, options_.fallback_budget);
    } catch (const BudgetExceeded& e) {
      throw BranchFailure{e.what()};
    }
    if (!r.exists) throw BranchFailure{"no partition of a piece with " + num(w.size()) + " vertices"};
    std::vector<VertexSet> out;
    for (const VertexSet& local : r.classes(sub.graph.order(), static_cast<int>(orders.size())))
      out.push_back(sub.lift(local, g_.order()));
    return out;
  }

  void note(std::string line) {
    if (options_.record_trace) meta_.trace.push_back(std::move(line));
  }

 private:
  std::pair<VertexSet, VertexSet> exact_two(const VertexSet& c, int p, int q, const std::string& why = "fallback") {
    const int orders[] = {p, q};
    auto classes = exact(c, orders, why);
    return {std::move(classes[0]), std::move(classes[1])};
  }

  std::optional<VertexSet> hitting(const VertexSet& w, int t) {
    const auto targets = list_cliques(g_, w, t);
    return independent_hitting_set(g_, w, targets);
  }

  std::pair<VertexSet, VertexSet> peel_all(const VertexSet& c, int p, int q) {
    if (auto i = hitting(c, p)) return {c - *i, std::move(*i)};
    return exact_two(c, p, q, "no independent set meets every K_" + num(p));
  }

  std::pair<VertexSet, VertexSet> split_component(const VertexSet& c, int p, int q) {
    if (!contains_clique(g_, c, p)) return {c, g_.empty_set()};
    const int size = c.size();
    const int delta = max_degree_within(g_, c);
    bool complete = true;
    for (Vertex v : c)
      if (g_.neighborhood(v).intersection_size(c) != size - 1) complete = false;
    if (complete) {
      // Complete piece: p-1 vertices on one side, the rest on the other.
      if (size > p + q - 2) throw BranchFailure{"complete piece K_" + num(size) + " cannot be split"};
      VertexSet a = g_.empty_set();
      for (Vertex v : c) {
        if (a.size() == p - 1) break;
        a.insert(v);
      }
      return {a, c - a};
    }
    const int omega = clique_number_within(g_, c);
    if (omega > delta - 1) {
      note("piece has ω = Δ = " + num(delta) + ", peeling an independent set meeting every K_" + num(p));
      return peel_all(c, p, q);
    }
    const int q_eff = std::min(q, delta + 1 - p);
    note("split |W|=" + num(size) + " Δ=" + num(delta) + " ω=" + num(omega) + " (p,q)=(" + num(p) + "," +
         num(q_eff) + ")");
    if (q_eff < 2) return peel_all(c, p, q);

    if (delta == 6 && p + q_eff == 7) {
      if (p == 5) {
        auto i = hitting(c, omega);
        if (!i) return exact_two(c, p, q, "no hitting independent set at Δ=6, (5,2)");
        return {c - *i, std::move(*i)};
      }
      if (omega == 4) {
        try {
          return exact_two(c, p, q, "Δ=6, (4,3), ω=4");
        } catch (const BranchFailure&) {
          note("exact search unavailable, peeling an independent set meeting every K_4");
          if (auto i = hitting(c, 4)) return {c - *i, std::move(*i)};
          throw;
        }
      }
      auto i = hitting(c, omega);
      if (!i) return exact_two(c, p, q, "no hitting independent set at Δ=6, (4,3)");
      VertexSet rest = c - *i;
      if (!contains_clique(g_, rest, 4)) return {rest, std::move(*i)};
      if (connected_components(g_, rest).size() == 1) {
        const InducedSubgraph sub = induced_subgraph(g_, rest);
        if (auto w = match_odd_cycle_strong_product(sub.graph); w && w->clique_size == 2) {
          note("residual is an odd cycle times K_2");
          VertexSet first = g_.empty_set();
          for (Vertex v = 0; v < sub.graph.order(); ++v)
            if (w->coords[static_cast<std::size_t>(v)].second == 0) first.insert(sub.to_parent[static_cast<std::size_t>(v)]);
          return {first | *i, rest - first};
        }
      }
      auto i2 = hitting(rest, clique_number_within(g_, rest));
      if (!i2) return exact_two(c, p, q, "no second hitting independent set at Δ=6, (4,3)");
      return {rest - *i2, *i | *i2};
    }

    std::optional<VertexSet> i;
    if (omega == delta - 1) {
      i = hitting(c, omega);
      if (!i) return exact_two(c, p, q, "no hitting independent set at ω = Δ-1 = " + num(omega));
    } else {
      i = extend_to_maximal_independent(g_, c, g_.empty_set());
    }
    VertexSet rest = c - *i;
    if (q_eff >= 3) {
      auto [a, b] = split_two(rest, p, q_eff - 1);
      return {std::move(a), b | *i};
    }
    return {std::move(rest), std::move(*i)};
  }

  const Graph& g_;
  const PartitionOptions& options_;
  PartitionMeta& meta_;
};

std::vector<VertexSet> top_level_exact(const Graph& g, std::span<const int> orders, Splitter& splitter,
                                       const std::string& why) {
  try {
    return splitter.exact(g.all(), orders, why);
  } catch (const BranchFailure& f) {
    // Either the budget ran out or no partition exists at all.
    const oracle::ExistsResult r = oracle::exists_partition(g, orders, PartitionOptions{}.fallback_budget);
    if (!r.exists) throw ContractViolation("no valid partition exists although the hypotheses hold: " + f.why);
    return r.classes(g.order(), static_cast<int>(orders.size()));
  }
}

// Maximum K_p-free sets by branch-and-bound. Vertices are taken in ascending
// degree order; the bound covers the undecided suffix greedily by cliques,
// each of which holds at most p-1 vertices of a K_p-free set.
class FamilySearch {
 public:
  FamilySearch(const Graph& g, int p) : g_(g), p_(p) {
    const int n = g.order();
    order_.resize(static_cast<std::size_t>(n));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    suffix_bound_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
      VertexSet left = g.empty_set();
      for (int j = i; j < n; ++j) left.insert(order_[static_cast<std::size_t>(j)]);
      int bound = 0;
      while (!left.empty()) {
        VertexSet clique = g.empty_set();
        VertexSet cand = left;
        while (!cand.empty()) {
          const Vertex v = cand.first();
          clique.insert(v);
          cand &= g.neighborhood(v);
        }
        left -= clique;
        bound += std::min(clique.size(), p - 1);
      }
      suffix_bound_[static_cast<std::size_t>(i)] = bound;
    }
  }

  std::vector<VertexSet> run() {
    VertexSet s = g_.empty_set();
    walk(0, s, 0);
    return std::move(optima_);
  }

 private:
  void walk(int i, VertexSet& s, int size) {
    if (size + suffix_bound_[static_cast<std::size_t>(i)] < best_) return;
    if (i == g_.order()) {
      if (size > best_) {
        best_ = size;
        optima_.clear();
      }
      optima_.push_back(s);
      return;
    }
    const Vertex v = order_[static_cast<std::size_t>(i)];
    if (!contains_clique(g_, g_.neighborhood(v) & s, p_ - 1)) {
      s.insert(v);
      walk(i + 1, s, size + 1);
      s.erase(v);
    }
    walk(i + 1, s, size);
  }

  const Graph& g_;
  int p_;
  std::vector<Vertex> order_;
  std::vector<int> suffix_bound_;
  int best_ = -1;
  std::vector<VertexSet> optima_;
};

bool can_add(const Graph& g, const VertexSet& s, Vertex v, int p) {
  return !contains_clique(g, g.neighborhood(v) & s, p - 1);
}

// Greedy K_p-free set improved by 1-out-2-in swaps, then by 1-1 swaps that
// lower the number of K_{p-1} copies.
VertexSet greedy_kpfree(const Graph& g, int p) {
  std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  VertexSet s = g.empty_set();
  for (Vertex v : order)
    if (can_add(g, s, v, p)) s.insert(v);
  bool improved = true;
  for (int pass = 0; improved && pass < g.order(); ++pass) {
    improved = false;
    for (Vertex x : s.members()) {
      VertexSet t = s;
      t.erase(x);
      std::vector<Vertex> addable;
      for (Vertex u = 0; u < g.order(); ++u)
        if (!t.contains(u) && u != x && can_add(g, t, u, p)) addable.push_back(u);
      for (std::size_t a = 0; a < addable.size() && !improved; ++a) {
        VertexSet t2 = t;
        t2.insert(addable[a]);
        for (std::size_t b = a + 1; b < addable.size(); ++b)
          if (can_add(g, t2, addable[b], p)) {
            t2.insert(addable[b]);
            s = t2;
            improved = true;
            break;
          }
      }
      if (improved) break;
    }
  }
  for (Vertex u = 0; u < g.order(); ++u)
    if (!s.contains(u) && can_add(g, s, u, p)) s.insert(u);
  std::uint64_t kp1 = count_cliques_in(g, s, p - 1);
  improved = true;
  for (int pass = 0; improved && pass < g.order(); ++pass) {
    improved = false;
    for (Vertex x : s.members()) {
      for (Vertex u = 0; u < g.order() && !improved; ++u) {
        if (s.contains(u)) continue;
        VertexSet t = s;
        t.erase(x);
        if (!can_add(g, t, u, p)) continue;
        t.insert(u);
        const auto c = count_cliques_in(g, t, p - 1);
        if (c < kp1) {
          s = t;
          kp1 = c;
          improved = true;
        }
      }
      if (improved) break;
    }
  }
  return s;
}

struct ComponentOutcome {
  VertexSet class1;
  bool exact = false;
};

// One connected component with ω = p. Works on the induced subgraph and
// returns local ids.
ComponentOutcome solve_component(const Graph& h, int p, int q, const PartitionOptions& options, PartitionMeta& meta,
                                 std::vector<ExchangeTrace>& traces) {
  const int n = h.order();
  const int delta = degree_stats(h).max_degree;
  const int q_eff = std::min(q, delta + 1 - p);
  auto note = [&](std::string line) {
    if (options.record_trace) meta.trace.push_back(std::move(line));
  };
  const bool exact = n <= options.exact_seed_threshold;
  std::vector<VertexSet> family;
  if (exact) family = maximum_kpfree_family(h, p);

  auto kq_free_member = [&](int t) -> std::optional<VertexSet> {
    for (const VertexSet& s : family)
      if (!contains_clique(h, s.complement(), t)) return s;
    return std::nullopt;
  };

  if (delta < 5 || q_eff < 3) {
    note("component of order " + num(n) + " outside the exchange hypotheses, exact selection");
    if (!exact) throw BudgetExceeded("component of order " + num(n) + " needs exact selection above the threshold");
    auto s = kq_free_member(q);
    if (!s) throw ContractViolation("no maximum K_" + num(p) + "-free set has a K_" + num(q) + "-free complement");
    return {*s, true};
  }

  VertexSet seed(n);
  std::vector<VertexSet> min_kp1;
  if (exact) {
    std::uint64_t fewest = ~std::uint64_t{0};
    for (const VertexSet& s : family) {
      const auto c = count_cliques_in(h, s, p - 1);
      if (c < fewest) {
        fewest = c;
        min_kp1.clear();
      }
      if (c == fewest) min_kp1.push_back(s);
    }
    seed = min_kp1.front();
    if (options.seed_policy != SeedPolicy::FamilyFirst) {
      const bool fewest_kq = options.seed_policy == SeedPolicy::FamilyMinKq;
      std::uint64_t chosen = 0;
      bool have = false;
      for (const VertexSet& s : min_kp1) {
        const auto c = count_cliques_in(h, s.complement(), q_eff);
        if (!have || (fewest_kq ? c < chosen : c > chosen)) {
          chosen = c;
          seed = s;
          have = true;
        }
      }
    }
  } else {
    seed = greedy_kpfree(h, p);
    note("component of order " + num(n) + " seeded greedily (maximality not certified)");
  }

  const int cap = options.iteration_cap > 0 ? options.iteration_cap : n * q_eff;
  ExchangeOutcome out;
  try {
    out = run_exchange(h, seed, p, q_eff, cap);
  } catch (const ContractViolation& e) {
    if (exact) throw;
    throw BudgetExceeded(std::string("greedy seed broke an exchange invariant: ") + e.what());
  }
  note("exchange: " + num(static_cast<long long>(out.trace.swaps.size())) + " swaps, " + num(out.trace.segments) +
       " segments");
  const bool converged = out.trace.complement_kq_free;
  traces.push_back(std::move(out.trace));
  if (converged) return {out.s, exact};

  meta.fallback_used = true;
  ++meta.fallback_count;
  note("exchange did not finish, exact selection over the family");
  if (!exact) throw BudgetExceeded("exchange hit its cap above the exact threshold");
  for (const VertexSet& s : min_kp1)
    if (!contains_clique(h, s.complement(), q_eff)) return {s, true};
  if (auto s = kq_free_member(q_eff)) return {*s, true};
  throw ContractViolation("no maximum K_" + num(p) + "-free set has a K_" + num(q_eff) + "-free complement");
}

MaxFirstResult max_first_impl(const Graph& g, int p, int q, const PartitionOptions& options) {
  MaxFirstResult result;
  Partition& part = result.partition;
  part.orders = {p, q};
  VertexSet class1 = g.empty_set();
  bool all_exact = true;
  for (const VertexSet& comp : connected_components(g)) {
    if (!contains_clique(g, comp, p)) {
      class1 |= comp;
      continue;
    }
    const InducedSubgraph sub = induced_subgraph(g, comp);
    ComponentOutcome c = solve_component(sub.graph, p, q, options, part.meta, result.traces);
    all_exact = all_exact && c.exact;
    class1 |= sub.lift(c.class1, g.order());
  }
  part.classes = {class1, class1.complement()};
  certify(g, part);
  part.meta.maximum_certified = all_exact;
  result.class1_size = class1.size();
  return result;
}

}  // namespace

std::vector<VertexSet> maximum_kpfree_family(const Graph& g, int p) {
  if (p < 2) throw InputError("maximum_kpfree_family needs p >= 2");
  if (g.order() > 64) throw BudgetExceeded("maximum_kpfree_family is limited to 64 vertices");
  return FamilySearch(g, p).run();
}

Partition partition_two(const Graph& g, int p, int q, const PartitionOptions& options) {
  const GraphFacts f = facts(g);
  if (p < 4 || q < 2) throw InputError("partition_two needs p >= 4 and q >= 2");
  if (f.max_degree < 6) throw InputError("partition_two needs Δ >= 6, got " + num(f.max_degree));
  if (f.clique_number > f.max_degree - 1)
    throw InputError("partition_two needs ω <= Δ-1, got ω=" + num(f.clique_number) + " Δ=" + num(f.max_degree));
  if (p + q != f.max_degree + 1)
    throw InputError("partition_two needs p + q = Δ + 1 = " + num(f.max_degree + 1));
  Partition out;
  out.orders = {p, q};
  Splitter splitter(g, options, out.meta);
  try {
    auto [a, b] = splitter.split_two(g.all(), p, q);
    out.classes = {std::move(a), std::move(b)};
  } catch (const BranchFailure& e) {
    out.classes = top_level_exact(g, out.orders, splitter, e.why);
  }
  certify(g, out);
  return out;
}

Partition partition_k(const Graph& g, const PartitionSpec& spec, const PartitionOptions& options) {
  const GraphFacts f = facts(g);
  if (!spec.valid_for(g))
    throw InputError("spec " + spec.to_string() + " needs Σ p_i = Δ - 1 + k = " + num(f.max_degree - 1 + spec.k()));
  if (f.clique_number > f.max_degree - 1)
    throw InputError("partition_k needs ω <= Δ-1, got ω=" + num(f.clique_number) + " Δ=" + num(f.max_degree));
  Partition out;
  out.orders.assign(spec.parts().begin(), spec.parts().end());
  if (spec.k() == 1) {
    out.classes = {g.all()};
    certify(g, out);
    return out;
  }
  if (spec[0] < 4) throw InputError("partition_k needs p_1 >= 4");
  if (f.max_degree < 6) throw InputError("partition_k needs Δ >= 6, got " + num(f.max_degree));
  Splitter splitter(g, options, out.meta);
  try {
    out.classes = splitter.split_k(g.all(), spec.parts());
  } catch (const BranchFailure& e) {
    out.classes = top_level_exact(g, out.orders, splitter, e.why);
  }
  certify(g, out);
  return out;
}

MaxFirstResult max_kpfree_partition(const Graph& g, int p, int q, const PartitionOptions& options) {
  const GraphFacts f = facts(g);
  if (p < 3 || q < 3) throw InputError("max_kpfree_partition needs p, q >= 3");
  if (f.max_degree < 5) throw InputError("max_kpfree_partition needs Δ >= 5, got " + num(f.max_degree));
  if (f.clique_number != p) throw InputError("max_kpfree_partition needs ω = p, got ω=" + num(f.clique_number));
  if (p + q != f.max_degree + 1)
    throw InputError("max_kpfree_partition needs p + q = Δ + 1 = " + num(f.max_degree + 1));
  return max_first_impl(g, p, q, options);
}

MaxFirstResult partition_k_with_max_first(const Graph& g, const PartitionSpec& spec, const PartitionOptions& options) {
  const GraphFacts f = facts(g);
  if (spec.k() < 3) throw InputError("partition_k_with_max_first needs k >= 3; use max_kpfree_partition for k = 2");
  if (spec[1] < 4) throw InputError("partition_k_with_max_first needs p_2 >= 4");
  if (f.max_degree < 9) throw InputError("partition_k_with_max_first needs Δ >= 9, got " + num(f.max_degree));
  if (f.clique_number != spec[0])
    throw InputError("partition_k_with_max_first needs ω = p_1, got ω=" + num(f.clique_number));
  if (!spec.valid_for(g))
    throw InputError("spec " + spec.to_string() + " needs Σ p_i = Δ - 1 + k = " + num(f.max_degree - 1 + spec.k()));
  const auto tail = spec.parts().subspan(1);
  const int q = std::accumulate(tail.begin(), tail.end(), 0) - (spec.k() - 2);
  MaxFirstResult first = max_first_impl(g, spec[0], q, options);

  MaxFirstResult result;
  result.traces = std::move(first.traces);
  result.class1_size = first.class1_size;
  Partition& out = result.partition;
  out.orders.assign(spec.parts().begin(), spec.parts().end());
  out.meta = first.partition.meta;
  out.meta.certified = false;
  const VertexSet rest = first.partition.classes[1];
  Splitter splitter(g, options, out.meta);
  std::vector<VertexSet> tail_classes;
  try {
    tail_classes = splitter.split_k(rest, tail);
  } catch (const BranchFailure& e) {
    try {
      tail_classes = splitter.exact(rest, tail, "residual: " + e.why);
    } catch (const BranchFailure& again) {
      throw BudgetExceeded("residual could not be split: " + again.why);
    }
  }
  out.classes = {first.partition.classes[0]};
  for (VertexSet& c : tail_classes) out.classes.push_back(std::move(c));
  certify(g, out);
  return result;
}

}  // namespace kpfree
