#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "commands.hpp"
#include "kpfree/cliques.hpp"
#include "kpfree/enumeration.hpp"
#include "kpfree/errors.hpp"
#include "kpfree/generators.hpp"
#include "kpfree/graph_io.hpp"
#include "kpfree/isomorphism.hpp"
#include "kpfree/oracle.hpp"
#include "kpfree/partition.hpp"
#include "kpfree/rng.hpp"

namespace kpfree::cli {

using nlohmann::json;

namespace {

struct Candidate {
  std::string id;
  Graph graph;
  std::string canonical;  // empty above 10 vertices
};

struct Verdict {
  bool checked = false;
  bool exists = true;
  std::uint64_t nodes = 0;
  std::string skipped;
};

std::vector<std::pair<std::string, Graph>> named_graphs() {
  return {{"h1_figure", h1_figure()},
          {"c5_x_k2", strong_product(cycle_graph(5), complete_graph(2))},
          {"c7_x_k2", strong_product(cycle_graph(7), complete_graph(2))},
          {"c5_x_k3", strong_product(cycle_graph(5), complete_graph(3))},
          {"h0_pendant", h0_pendant()}};
}

std::string canonical_if_small(const Graph& g) { return g.order() <= 10 ? canonical_form(g) : std::string(); }

std::string pad(std::size_t x, int width) {
  std::string s = std::to_string(x);
  return std::string(static_cast<std::size_t>(std::max(0, width - static_cast<int>(s.size()))), '0') + s;
}

}  // namespace

int run_search(const SearchArgs& args, const CommonArgs& common, RunManifest& manifest) {
  const PartitionSpec spec = PartitionSpec::parse(args.spec);
  const int delta = spec.matching_max_degree();
  const int max_omega = args.max_omega >= 0 ? args.max_omega : delta - 1;
  if (args.n_min < 1 || args.n_max < args.n_min) throw InputError("bad vertex range");
  if (args.jobs < 1) throw InputError("--jobs must be at least 1");
  manifest.set_seed(common.seed);
  manifest.set_arg("spec", spec.to_string());
  manifest.set_arg("mode", args.mode);
  manifest.set_arg("n_range", {args.n_min, args.n_max});
  manifest.set_arg("max_omega", max_omega);

  auto admits = [&](const Graph& g) {
    if (g.order() == 0 || degree_stats(g).max_degree != delta) return false;
    if (!args.allow_disconnected && !is_connected(g)) return false;
    return clique_number(g) <= max_omega;
  };

  std::vector<Candidate> candidates;
  json generated = json::object();
  if (args.mode == "exhaustive") {
    const auto levels = enumerate_graphs(args.n_max, {delta, max_omega});
    for (int n = args.n_min; n <= args.n_max; ++n) {
      const auto& level = levels[static_cast<std::size_t>(n)];
      generated[std::to_string(n)] = level.size();
      for (std::size_t i = 0; i < level.size(); ++i)
        if (admits(level[i].graph))
          candidates.push_back({"n" + std::to_string(n) + "-" + pad(i, 6), level[i].graph, level[i].canonical});
    }
  } else if (args.mode == "random") {
    std::set<std::string> seen;
    for (int i = 0; i < args.samples; ++i) {
      Rng rng(derive_seed(common.seed, static_cast<std::uint64_t>(i)));
      const int n = rng.uniform_int(args.n_min, args.n_max);
      const double p = rng.uniform_real(args.p_min, args.p_max);
      Graph g = random_bounded_degree(n, delta, p, rng.bits());
      if (!admits(g)) continue;
      std::string canon = canonical_if_small(g);
      if (!seen.insert(canon.empty() ? to_edge_list(g) : canon).second) continue;
      candidates.push_back({"r" + pad(static_cast<std::size_t>(i), 6), std::move(g), std::move(canon)});
    }
    generated["samples"] = args.samples;
  } else {
    throw InputError("unknown search mode '" + args.mode + "'");
  }

  std::map<std::string, std::string> named_by_canonical;
  json named = json::array();
  if (args.include_named) {
    for (auto& [name, g] : named_graphs()) {
      const bool ok = admits(g);
      named.push_back({{"name", name}, {"n", g.order()}, {"admitted", ok}});
      if (!ok) continue;
      std::string canon = canonical_if_small(g);
      if (!canon.empty()) named_by_canonical[canon] = name;
      candidates.push_back({"named-" + name, g, canon});
    }
  }

  oracle::SearchBudget budget;
  if (args.max_n > 0) {
    budget.max_n_two_class = args.max_n;
    budget.max_n_multi_class = args.max_n;
  }
  std::vector<Verdict> verdicts(candidates.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < candidates.size(); i = next++) {
      try {
        const auto r = oracle::exists_partition(candidates[i].graph, spec, budget);
        verdicts[i] = {true, r.exists, r.nodes, {}};
      } catch (const BudgetExceeded& e) {
        verdicts[i] = {false, true, 0, e.what()};
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < args.jobs; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  json refutations = json::array();
  json skipped = json::array();
  std::size_t checked = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Candidate& c = candidates[i];
    const Verdict& v = verdicts[i];
    if (!v.checked) {
      skipped.push_back({{"id", c.id}, {"reason", v.skipped}});
      continue;
    }
    ++checked;
    if (v.exists) continue;
    json edges = json::array();
    for (const Edge& e : c.graph.edges()) edges.push_back({e.u, e.v});
    json r = {{"id", c.id},
              {"n", c.graph.order()},
              {"m", c.graph.num_edges()},
              {"clique_number", clique_number(c.graph)},
              {"nodes", v.nodes},
              {"edges", edges}};
    if (auto it = named_by_canonical.find(c.canonical); !c.canonical.empty() && it != named_by_canonical.end())
      r["isomorphic_to"] = it->second;
    refutations.push_back(std::move(r));
  }

  json j;
  j["spec"] = std::vector<int>(spec.parts().begin(), spec.parts().end());
  j["max_degree"] = delta;
  j["max_omega"] = max_omega;
  j["mode"] = args.mode;
  j["generated"] = generated;
  j["candidates"] = candidates.size();
  j["checked"] = checked;
  j["skipped"] = skipped;
  if (args.include_named) j["named"] = named;
  j["refutations"] = refutations;
  manifest.set_summary({{"candidates", candidates.size()}, {"checked", checked}, {"refutations", refutations.size()}});
  manifest.set_flag("budget_skipped", skipped.size());
  write_json(j, common.output);
  return kOk;
}

}  // namespace kpfree::cli
