#include "kpfree/enumeration.hpp"

#include <map>

#include "kpfree/cliques.hpp"
#include "kpfree/errors.hpp"
#include "kpfree/isomorphism.hpp"

namespace kpfree {

std::vector<std::vector<EnumeratedGraph>> enumerate_graphs(int n_max, const HereditaryFilter& filter) {
  if (n_max < 0) throw InputError("enumeration needs n_max >= 0");
  if (n_max > 8) throw BudgetExceeded("exhaustive enumeration is limited to 8 vertices");
  std::vector<std::vector<EnumeratedGraph>> levels(static_cast<std::size_t>(n_max) + 1);
  levels[0].push_back({Graph(0, {}), canonical_form(Graph(0, {}))});
  for (int n = 1; n <= n_max; ++n) {
    std::map<std::string, Graph> seen;
    const int old = n - 1;
    for (const EnumeratedGraph& base : levels[static_cast<std::size_t>(old)]) {
      const Graph& h = base.graph;
      const std::vector<Edge> edges = h.edges();
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << old); ++mask) {
        const VertexSet nbrs = [&] {
          VertexSet s(old);
          for (Vertex v = 0; v < old; ++v)
            if ((mask >> v) & 1U) s.insert(v);
          return s;
        }();
        if (nbrs.size() > filter.max_degree) continue;
        bool room = true;
        for (Vertex v : nbrs)
          if (h.degree(v) >= filter.max_degree) room = false;
        if (!room) continue;
        if (filter.max_clique != INT_MAX && clique_number_within(h, nbrs) + 1 > filter.max_clique) continue;
        std::vector<Edge> grown = edges;
        for (Vertex v : nbrs) grown.push_back({v, old});
        Graph g(n, grown);
        std::string key = canonical_form(g);
        seen.emplace(std::move(key), std::move(g));
      }
    }
    auto& level = levels[static_cast<std::size_t>(n)];
    for (auto& [key, g] : seen) level.push_back({std::move(g), key});
  }
  return levels;
}

}  // namespace kpfree
