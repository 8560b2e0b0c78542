#include "kpfree/hitting.hpp"

#include <vector>

#include "kpfree/cliques.hpp"
#include "kpfree/errors.hpp"

namespace kpfree {
namespace {

class HittingSearch {
 public:
  HittingSearch(const Graph& g, const VertexSet& within, std::span<const VertexSet> targets)
      : g_(g), targets_(targets.begin(), targets.end()), chosen_(g.order()), blocked_(g.order()) {
    blocked_ = within.complement();
  }

  std::optional<VertexSet> run() {
    if (search()) return chosen_;
    return std::nullopt;
  }

 private:
  // Branch on the unhit target with the fewest usable vertices.
  bool search() {
    const VertexSet* pick = nullptr;
    VertexSet pick_options(g_.order());
    int fewest = -1;
    for (const VertexSet& t : targets_) {
      if (t.intersects(chosen_)) continue;
      VertexSet options = t - blocked_;
      const int c = options.size();
      if (c == 0) return false;
      if (fewest == -1 || c < fewest) {
        fewest = c;
        pick = &t;
        pick_options = std::move(options);
      }
    }
    if (pick == nullptr) return true;
    const VertexSet saved_blocked = blocked_;
    for (Vertex v : pick_options) {
      chosen_.insert(v);
      const VertexSet before = blocked_;
      blocked_ |= g_.neighborhood(v);
      blocked_.insert(v);
      if (search()) return true;
      blocked_ = before;
      chosen_.erase(v);
      // Later siblings never use v.
      blocked_.insert(v);
    }
    blocked_ = saved_blocked;
    return false;
  }

  const Graph& g_;
  std::vector<VertexSet> targets_;
  VertexSet chosen_;
  VertexSet blocked_;
};

}  // namespace

VertexSet extend_to_maximal_independent(const Graph& g, const VertexSet& within, VertexSet seed) {
  for (Vertex v : within)
    if (!seed.contains(v) && !g.neighborhood(v).intersects(seed)) seed.insert(v);
  return seed;
}

std::optional<VertexSet> independent_hitting_set(const Graph& g, const VertexSet& within,
                                                 std::span<const VertexSet> targets) {
  require_universe(g, within);
  HittingSearch search(g, within, targets);
  auto found = search.run();
  if (!found) return std::nullopt;
  return extend_to_maximal_independent(g, within, std::move(*found));
}

HittingResult hitting_mis(const Graph& g) {
  if (g.order() == 0) throw InputError("hitting_mis needs a nonempty graph");
  if (!is_connected(g)) throw InputError("hitting_mis needs a connected graph; split into components first");
  HittingResult result;
  result.clique_number = clique_number(g);
  result.max_degree = degree_stats(g).max_degree;
  result.hypothesis_holds = 3 * result.clique_number >= 2 * (result.max_degree + 1);
  if (result.clique_number % 2 == 0) {
    if (auto w = match_odd_cycle_strong_product(g); w && 2 * w->clique_size == result.clique_number) {
      result.status = HittingResult::Status::Exceptional;
      result.exceptional = std::move(w);
      return result;
    }
  }
  const auto maximum = list_cliques(g, g.all(), result.clique_number);
  auto found = independent_hitting_set(g, g.all(), maximum);
  if (!found) return result;
  // Post-verification against the definition.
  if (!is_independent(g, *found)) throw CertificationFailure("hitting set is not independent");
  for (const VertexSet& c : maximum)
    if (!c.intersects(*found)) throw CertificationFailure("hitting set misses clique " + c.to_string());
  for (Vertex v = 0; v < g.order(); ++v)
    if (!found->contains(v) && !g.neighborhood(v).intersects(*found))
      throw CertificationFailure("hitting set is not maximal at vertex " + std::to_string(v));
  result.status = HittingResult::Status::Found;
  result.independent_set = std::move(*found);
  return result;
}

}  // namespace kpfree
