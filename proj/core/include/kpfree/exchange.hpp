#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kpfree/graph.hpp"

namespace kpfree {

/// One swap of the exchange loop: v enters S, y leaves it.
struct SwapRecord {
  int step = 0;
  int segment = 0;
  Vertex v = -1;
  Vertex y = -1;
  VertexSet a_v;
  /// The B set v was drawn from; empty at the first step of a segment.
  VertexSet b_prev;
  std::uint64_t kp1_count = 0;
  /// #K_q in the complement after the swap.
  std::uint64_t kq_count = 0;
  /// Copies of K_q through y in the complement after the swap.
  int kq_through_y = 0;
  /// Smallest nonzero |K(y) ∩ (K(v) \ {v})| over K_q copies through y after and
  /// through v before the swap; -1 when every such intersection is empty.
  int min_overlap = -1;
  /// y was picked so that no K_q through it meets the first K_q through v_0.
  bool disjoint_choice = false;
  /// Every vertex of A_v \ {v} keeps #K_{p-1} when swapped for v.
  bool all_keep_kp1 = false;
  /// #K_q(S̄_{i+1} \ {v_{i+1}}) == #K_q(S̄_i \ {v_i}); only meaningful when
  /// has_next is set.
  bool residual_kq_preserved = false;
  bool has_next = false;
};

struct ExchangeTrace {
  int p = 0;
  int q = 0;
  VertexSet seed;
  std::uint64_t seed_kp1_count = 0;
  std::uint64_t seed_kq_count = 0;
  std::vector<SwapRecord> swaps;
  int segments = 0;
  bool cap_hit = false;
  /// No vertex of the complement admitted a swap keeping #K_{p-1}.
  bool stalled = false;
  bool complement_kq_free = false;
  std::vector<std::string> events;
};

/// Current S and S̄ of the exchange procedure with the counts it must keep.
class ExchangeState {
 public:
  /// `s` must be K_p-free in g; throws ContractViolation otherwise.
  ExchangeState(const Graph& g, VertexSet s, int p, int q, int iteration_cap);

  const Graph& graph() const noexcept { return *g_; }
  const VertexSet& s() const noexcept { return s_; }
  const VertexSet& complement() const noexcept { return complement_; }
  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  std::uint64_t kp1_count() const noexcept { return kp1_count_; }
  std::uint64_t kq_count() const noexcept { return kq_count_; }
  int step() const noexcept { return step_; }
  int iteration_cap() const noexcept { return iteration_cap_; }
  const std::vector<SwapRecord>& history() const noexcept { return history_; }

  /// Intersection of all p-cliques through v in H[S ∪ {v}], v in the complement.
  VertexSet build_A(Vertex v) const;
  /// B set of a vertex y of the complement: the common part of the K_q copies
  /// through y when there are one or two, N[y] ∩ S̄ when y sits in a K_{q+1}
  /// component of H[S̄].
  VertexSet build_B(Vertex y) const;

  /// #K_{p-1} in H[(S ∪ {v}) \ {y}].
  std::uint64_t kp1_after_swap(Vertex v, Vertex y) const;

  /// Moves v into S and y out; checks |S|, #K_{p-1} and K_p-freeness and
  /// appends `record` (completed with the new counts) to the history.
  void swap(Vertex v, Vertex y, SwapRecord record);
  SwapRecord& last_record() { return history_.back(); }

 private:
  const Graph* g_;
  VertexSet s_;
  VertexSet complement_;
  int p_;
  int q_;
  int size_;
  std::uint64_t kp1_count_;
  std::uint64_t kq_count_;
  int step_ = 0;
  int iteration_cap_;
  std::vector<SwapRecord> history_;
};

struct ExchangeOutcome {
  VertexSet s;
  ExchangeTrace trace;
};

/// Runs the exchange loop from `seed` (a maximum K_p-free set) until the
/// complement is K_q-free or `iteration_cap` swaps have been made.
ExchangeOutcome run_exchange(const Graph& g, const VertexSet& seed, int p, int q, int iteration_cap);

}  // namespace kpfree
