#pragma once

#include <vector>

#include "kpfree/exchange.hpp"
#include "kpfree/graph.hpp"
#include "kpfree/oracle.hpp"
#include "kpfree/partition.hpp"

namespace kpfree {

/// How the exchange loop is seeded among the maximum K_p-free sets with the
/// fewest copies of K_{p-1}.
enum class SeedPolicy {
  /// First such set in search order; the exchange loop removes the K_q copies.
  FamilyFirst,
  /// The one whose complement has the fewest copies of K_q.
  FamilyMinKq,
  /// The one whose complement has the most copies of K_q; gives the exchange
  /// loop the most work.
  FamilyMaxKq,
};

struct PartitionOptions {
  /// Caps for the exact fallback. Multi-class search gets more room than the
  /// oracle default because fallbacks run on small residual pieces.
  oracle::SearchBudget fallback_budget{22, 24, 26, std::chrono::milliseconds{60000}};
  /// Exact enumeration of maximum K_p-free sets up to this order.
  int exact_seed_threshold = 20;
  SeedPolicy seed_policy = SeedPolicy::FamilyFirst;
  /// Exchange swaps before falling back; 0 means n*q.
  int iteration_cap = 0;
  bool record_trace = true;
};

/// V(g) into a K_p-free and a K_q-free class. Needs Δ >= 6, ω <= Δ-1,
/// p >= 4, q >= 2 and p + q = Δ + 1; InputError otherwise.
Partition partition_two(const Graph& g, int p, int q, const PartitionOptions& options = {});

/// V(g) into classes that are K_{p_i}-free, one per spec part. Needs
/// Δ >= 6, ω <= Δ-1, p_1 >= 4 and a spec valid for g (only the last two
/// conditions matter when k = 1).
Partition partition_k(const Graph& g, const PartitionSpec& spec, const PartitionOptions& options = {});

struct MaxFirstResult {
  Partition partition;
  /// One trace per component that went through the exchange loop.
  std::vector<ExchangeTrace> traces;
  int class1_size = 0;
};

/// Class 1 a maximum K_p-free set, class 2 K_q-free. Needs Δ >= 5, ω = p,
/// p, q >= 3 and p + q = Δ + 1. Disconnected graphs are handled per component.
MaxFirstResult max_kpfree_partition(const Graph& g, int p, int q, const PartitionOptions& options = {});

/// Class 1 a maximum K_{p_1}-free set, the rest split per the spec tail.
/// Needs Δ >= 9, k >= 3, p_1 >= p_2 >= 4, ω = p_1 and a valid spec.
MaxFirstResult partition_k_with_max_first(const Graph& g, const PartitionSpec& spec,
                                          const PartitionOptions& options = {});

/// Every maximum K_p-free set of g (exact; n <= 64).
std::vector<VertexSet> maximum_kpfree_family(const Graph& g, int p);

}  // namespace kpfree
