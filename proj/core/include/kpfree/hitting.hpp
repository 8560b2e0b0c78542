#pragma once

#include <optional>
#include <span>

#include "kpfree/graph.hpp"
#include "kpfree/isomorphism.hpp"

namespace kpfree {

/// Exact backtracking search for an independent set of H[within] meeting every
/// set in `targets`; the result is then extended (lowest id first) to a
/// maximal independent set of H[within]. nullopt when none exists.
std::optional<VertexSet> independent_hitting_set(const Graph& g, const VertexSet& within,
                                                 std::span<const VertexSet> targets);

/// Lowest-id-first maximal independent set of H[within] containing `seed`.
VertexSet extend_to_maximal_independent(const Graph& g, const VertexSet& within, VertexSet seed);

struct HittingResult {
  enum class Status { Found, Exceptional, NotFound };
  Status status = Status::NotFound;
  /// A maximal independent set meeting every maximum clique (status Found).
  VertexSet independent_set;
  /// Set when g is an odd cycle strong-multiplied by K_{ω/2} (status Exceptional).
  std::optional<StrongProductWitness> exceptional;
  int clique_number = 0;
  int max_degree = 0;
  /// 3ω >= 2(Δ + 1); when false a NotFound result carries no surprise.
  bool hypothesis_holds = false;
};

/// Maximal independent set hitting every maximum clique of a connected graph.
/// Disconnected or empty input throws InputError.
HittingResult hitting_mis(const Graph& g);

}  // namespace kpfree
