#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <vector>

#include "kpfree/graph.hpp"
#include "kpfree/partition.hpp"

// Exact brute-force ground truth. Everything here runs on 64-bit adjacency
// masks and shares no search code with the clique engine or the partitioner,
// so the two can be checked against each other.
namespace kpfree::oracle {

/// Hard caps on instance size. Requests beyond a cap throw BudgetExceeded.
struct SearchBudget {
  /// exists_partition with k <= 2 (2^n assignments).
  int max_n_two_class = 22;
  /// exists_partition with k >= 3 (3^13 assignments at the default).
  int max_n_multi_class = 13;
  /// exact_max_kpfree, exact_chromatic.
  int max_n_branch_and_bound = 26;
  /// Zero means no time cap.
  std::chrono::milliseconds time_cap{0};
};

struct ExistsResult {
  bool exists = false;
  /// Class index per vertex when a partition exists.
  std::vector<int> assignment;
  /// Search nodes visited; with the vertex order below this is the
  /// refutation certificate (re-running reproduces it exactly).
  std::uint64_t nodes = 0;
  std::vector<Vertex> vertex_order;

  std::vector<VertexSet> classes(int n, int k) const;
};

/// Depth-first search over class assignments, vertices in descending degree
/// order, pruning a branch as soon as some class contains its forbidden clique.
/// `orders` need not be sorted; entries must be >= 1.
ExistsResult exists_partition(const Graph& g, std::span<const int> orders, const SearchBudget& budget = {});
ExistsResult exists_partition(const Graph& g, const PartitionSpec& spec, const SearchBudget& budget = {});

struct MaxKpFreeResult {
  int size = 0;
  VertexSet witness;
  std::uint64_t optimum_count = 0;
  std::uint64_t nodes = 0;
};

/// Largest K_p-free vertex set, by branch-and-bound with a greedy clique-cover
/// bound (each clique of the cover contributes at most p-1 vertices).
MaxKpFreeResult exact_max_kpfree(const Graph& g, int p, const SearchBudget& budget = {});

/// Every maximum K_p-free set, in search order.
std::vector<VertexSet> all_max_kpfree(const Graph& g, int p, const SearchBudget& budget = {});

struct ChromaticResult {
  int chromatic_number = 0;
  std::vector<int> coloring;
  std::uint64_t nodes = 0;
};

/// DSATUR branch-and-bound, seeded by the DSATUR greedy upper bound.
ChromaticResult exact_chromatic(const Graph& g, const SearchBudget& budget = {});

/// Candidates (equal size, each K_p-free) achieving the fewest copies of
/// K_{p-1}; input order preserved.
std::vector<VertexSet> min_kp1_filter(const Graph& g, std::span<const VertexSet> candidates, int p);

/// Number of t-cliques inside `within` (mask arithmetic, n <= 64).
std::uint64_t count_cliques_mask(const Graph& g, const VertexSet& within, int t);

}  // namespace kpfree::oracle
