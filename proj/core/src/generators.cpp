#include "kpfree/generators.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <string>

#include "kpfree/cliques.hpp"
#include "kpfree/errors.hpp"
#include "kpfree/rng.hpp"

namespace kpfree {
namespace {

void require_nonnegative(int n) {
  if (n < 0) throw InputError("vertex count must be non-negative");
}

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
}

}  // namespace

Graph empty_graph(int n) {
  require_nonnegative(n);
  return Graph(n, std::span<const Edge>{});
}

Graph complete_graph(int n) {
  require_nonnegative(n);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) edges.push_back({u, (u + 1) % n});
  return Graph(n, edges);
}

Graph path_graph(int n) {
  require_nonnegative(n);
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
  return Graph(n, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order()});
  return Graph(a.order() + b.order(), edges);
}

Graph strong_product(const Graph& a, const Graph& b) {
  if (a.order() == 0 || b.order() == 0) throw InputError("strong product factors must be nonempty");
  const int nb = b.order();
  auto id = [nb](Vertex i, Vertex j) { return i * nb + j; };
  auto close = [](const Graph& g, Vertex x, Vertex y) { return x == y || g.adjacent(x, y); };
  std::vector<Edge> edges;
  const int n = a.order() * nb;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      const Vertex i1 = x / nb, j1 = x % nb, i2 = y / nb, j2 = y % nb;
      if (close(a, i1, i2) && close(b, j1, j2)) edges.push_back({id(i1, j1), id(i2, j2)});
    }
  }
  return Graph(n, edges);
}

Graph h1_figure() {
  // Edge set read off the drawing, labels y1..y8.
  static constexpr std::array<std::array<int, 2>, 16> kEdges{{{1, 2},
                                                              {1, 3},
                                                              {2, 3},
                                                              {2, 4},
                                                              {2, 5},
                                                              {3, 4},
                                                              {3, 5},
                                                              {1, 6},
                                                              {1, 8},
                                                              {4, 6},
                                                              {4, 7},
                                                              {5, 7},
                                                              {5, 8},
                                                              {6, 7},
                                                              {6, 8},
                                                              {7, 8}}};
  std::vector<Edge> edges;
  for (const auto& e : kEdges) edges.push_back({e[0] - 1, e[1] - 1});
  return Graph(8, edges);
}

Graph h0_pendant() {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 8; ++u)
    for (Vertex v = u + 1; v < 8; ++v) edges.push_back({u, v});
  for (Vertex i = 0; i < 8; ++i) {
    edges.push_back({i, 8 + 2 * i});
    edges.push_back({i, 9 + 2 * i});
  }
  return Graph(24, edges);
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  require_nonnegative(n);
  require_probability(p);
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph random_bounded_degree(int n, int max_degree, double p, std::uint64_t seed) {
  require_nonnegative(n);
  require_probability(p);
  if (max_degree < 0) throw InputError("degree cap must be non-negative");
  Rng rng(seed);
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  for (std::size_t i = pairs.size(); i > 1; --i)
    std::swap(pairs[i - 1], pairs[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(i) - 1))]);
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edges;
  for (const Edge& e : pairs) {
    auto& du = degree[static_cast<std::size_t>(e.u)];
    auto& dv = degree[static_cast<std::size_t>(e.v)];
    if (du < max_degree && dv < max_degree && rng.bernoulli(p)) {
      ++du;
      ++dv;
      edges.push_back(e);
    }
  }
  return Graph(n, edges);
}

Graph random_planted(int n, int clique_size, int cliques, double p, std::uint64_t seed) {
  require_nonnegative(n);
  require_probability(p);
  if (clique_size < 0 || clique_size > n) throw InputError("planted clique size must lie in [0, n]");
  if (cliques < 0) throw InputError("planted clique count must be non-negative");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.push_back({u, v});
  std::vector<Vertex> pool(static_cast<std::size_t>(n));
  for (int c = 0; c < cliques; ++c) {
    for (Vertex v = 0; v < n; ++v) pool[static_cast<std::size_t>(v)] = v;
    // Partial Fisher-Yates: the first clique_size entries form the clique.
    for (int i = 0; i < clique_size; ++i) {
      const int j = rng.uniform_int(i, n - 1);
      std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    for (int i = 0; i < clique_size; ++i)
      for (int j = i + 1; j < clique_size; ++j)
        edges.push_back({pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]});
  }
  return Graph(n, edges);
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Complete: return "complete";
    case Family::Cycle: return "cycle";
    case Family::Path: return "path";
    case Family::StrongProduct: return "strong_product";
    case Family::H1Figure: return "h1_figure";
    case Family::H0Pendant: return "h0_pendant";
    case Family::Random: return "random";
    case Family::Planted: return "planted";
    case Family::BoundedDegree: return "bounded";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::Complete, Family::Cycle, Family::Path, Family::StrongProduct, Family::H1Figure,
                   Family::H0Pendant, Family::Random, Family::Planted, Family::BoundedDegree})
    if (family_name(f) == name) return f;
  return std::nullopt;
}

FamilySpec parse_factor(std::string_view text) {
  if (text.size() < 2) throw InputError("factor must look like K5, C7 or P3");
  FamilySpec spec;
  switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'K': spec.family = Family::Complete; break;
    case 'C': spec.family = Family::Cycle; break;
    case 'P': spec.family = Family::Path; break;
    default: throw InputError("unknown factor family in \"" + std::string(text) + "\"");
  }
  const auto digits = text.substr(1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), spec.n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw InputError("bad factor size in \"" + std::string(text) + "\"");
  return spec;
}

Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Complete: return complete_graph(spec.n);
    case Family::Cycle: return cycle_graph(spec.n);
    case Family::Path: return path_graph(spec.n);
    case Family::StrongProduct:
      if (spec.factors.size() != 2) throw InputError("strong_product needs exactly two factors");
      return strong_product(generate(spec.factors[0]), generate(spec.factors[1]));
    case Family::H1Figure: return h1_figure();
    case Family::H0Pendant: return h0_pendant();
    case Family::Random: return random_gnp(spec.n, spec.edge_probability, spec.seed);
    case Family::Planted:
      return random_planted(spec.n, spec.clique_size, spec.cliques, spec.edge_probability, spec.seed);
    case Family::BoundedDegree: return random_bounded_degree(spec.n, spec.max_degree, spec.edge_probability, spec.seed);
  }
  throw InputError("unknown family");
}

bool OmegaConstraint::admits(int omega, int delta) const {
  switch (kind) {
    case Kind::Any: return true;
    case Kind::AtMostDeltaMinus: return omega <= delta - value;
    case Kind::Exactly: return omega == value;
    case Kind::TwoThirdsBound: return 3 * omega >= 2 * (delta + 1);
  }
  return false;
}

CorpusResult generate_corpus(const CorpusRequest& request) {
  if (request.n_min < 1 || request.n_max < request.n_min) throw InputError("bad corpus vertex range");
  if (request.p_min < 0.0 || request.p_max > 1.0 || request.p_max < request.p_min)
    throw InputError("bad corpus edge probability range");
  if (request.planted_cliques > 0 &&
      (request.planted_size_min < 1 || request.planted_size_max < request.planted_size_min))
    throw InputError("bad planted clique size range");
  CorpusResult result;
  while (result.entries.size() < request.count && result.attempts < request.max_attempts) {
    const std::uint64_t seed = derive_seed(request.seed, result.attempts++);
    Rng rng(seed);
    const int n = rng.uniform_int(request.n_min, request.n_max);
    const double p = rng.uniform_real(request.p_min, request.p_max);
    const std::uint64_t graph_seed = rng.bits();
    Graph g;
    if (request.planted_cliques > 0) {
      const int size = std::min(n, rng.uniform_int(request.planted_size_min, request.planted_size_max));
      g = random_planted(n, size, request.planted_cliques, p, graph_seed);
    } else if (request.degree_cap > 0) {
      const int cap = rng.uniform_int(std::min(request.delta_min, request.degree_cap), request.degree_cap);
      g = random_bounded_degree(n, cap, p, graph_seed);
    } else {
      g = random_gnp(n, p, graph_seed);
    }
    const int delta = degree_stats(g).max_degree;
    if (delta < request.delta_min || delta > request.delta_max) continue;
    if (request.connected && !is_connected(g)) continue;
    const int omega = clique_number(g);
    if (!request.omega.admits(omega, delta)) continue;
    result.entries.push_back({std::move(g), seed, delta, omega});
  }
  result.shortfall = result.entries.size() < request.count;
  return result;
}

}  // namespace kpfree
