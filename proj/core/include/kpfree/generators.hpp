#pragma once

#include <climits>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kpfree/graph.hpp"

namespace kpfree {

Graph empty_graph(int n);
Graph complete_graph(int n);
/// C_n, n >= 3.
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph disjoint_union(const Graph& a, const Graph& b);

/// a ⊠ b. Vertex (i, j) gets id i * b.order() + j.
Graph strong_product(const Graph& a, const Graph& b);

/// The 8-vertex 4-regular graph with no partition into a triangle-free set
/// and an independent set. Vertex i is y_{i+1} of the drawing.
Graph h1_figure();

/// K_8 with two pendant vertices on each clique vertex. Core vertices are
/// 0..7; the pendants of core vertex i are 8+2i and 9+2i.
Graph h0_pendant();

/// Erdős–Rényi G(n, p): pairs (u, v), u < v, in row-major order, one draw each.
Graph random_gnp(int n, double p, std::uint64_t seed);

/// `cliques` cliques of size `clique_size` on random vertex subsets, overlaid
/// on G(n, p) noise.
Graph random_planted(int n, int clique_size, int cliques, double p, std::uint64_t seed);

/// Pairs visited in a random order, each kept with probability p while both
/// endpoints still have degree below `max_degree`.
Graph random_bounded_degree(int n, int max_degree, double p, std::uint64_t seed);

enum class Family { Complete, Cycle, Path, StrongProduct, H1Figure, H0Pendant, Random, Planted, BoundedDegree };

struct FamilySpec {
  Family family = Family::Complete;
  int n = 0;
  double edge_probability = 0.5;
  std::uint64_t seed = 0;
  int clique_size = 0;
  int cliques = 0;
  int max_degree = 0;
  std::vector<FamilySpec> factors;
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// "K5", "C7", "P3" -> complete / cycle / path spec.
FamilySpec parse_factor(std::string_view text);

/// Throws InputError on parameters invalid for the family.
Graph generate(const FamilySpec& spec);

struct OmegaConstraint {
  enum class Kind {
    Any,
    AtMostDeltaMinus,  // ω <= Δ - value
    Exactly,           // ω == value
    TwoThirdsBound,    // 3ω >= 2(Δ + 1)
  };
  Kind kind = Kind::Any;
  int value = 0;

  bool admits(int omega, int delta) const;
};

struct CorpusRequest {
  int n_min = 8;
  int n_max = 16;
  int delta_min = 0;
  int delta_max = INT_MAX;
  OmegaConstraint omega;
  bool connected = true;
  std::size_t count = 100;
  std::uint64_t seed = 1;
  std::size_t max_attempts = 200000;
  double p_min = 0.2;
  double p_max = 0.6;
  /// When planted_cliques > 0 the planted model replaces plain G(n, p).
  int planted_cliques = 0;
  int planted_size_min = 0;
  int planted_size_max = 0;
  /// When > 0 (and no cliques are planted) the bounded-degree model with a
  /// cap drawn from [delta_min, degree_cap] replaces G(n, p).
  int degree_cap = 0;
};

struct CorpusEntry {
  Graph graph;
  std::uint64_t seed = 0;
  int max_degree = 0;
  int clique_number = 0;
};

struct CorpusResult {
  std::vector<CorpusEntry> entries;
  std::size_t attempts = 0;
  /// Set when fewer than `count` graphs passed the filter within the budget.
  bool shortfall = false;
};

/// Samples graphs attempt by attempt (attempt i uses derive_seed(seed, i)) and
/// keeps those passing the filter; deterministic for a fixed request.
CorpusResult generate_corpus(const CorpusRequest& request);

}  // namespace kpfree
