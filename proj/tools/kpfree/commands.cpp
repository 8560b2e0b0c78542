#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "kpfree/cliques.hpp"
#include "kpfree/errors.hpp"
#include "kpfree/generators.hpp"
#include "kpfree/graph_io.hpp"
#include "kpfree/oracle.hpp"
#include "kpfree/partitioner.hpp"

namespace kpfree::cli {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph read_graph_input(const std::string& path, RunManifest& manifest) {
  const std::string bytes = read_file(path);
  manifest.add_input(path, bytes);
  std::istringstream in(bytes);
  return format_for_path(path) == GraphFormat::Dimacs ? read_dimacs(in) : read_edge_list(in);
}

void write_json(const json& j, const std::optional<std::string>& output) {
  const std::string text = j.dump(2) + "\n";
  if (!output) {
    std::cout << text;
    return;
  }
  std::ofstream out(*output, std::ios::binary);
  if (!out) throw InputError("cannot write " + *output);
  out << text;
}

namespace {

json sets_to_json(std::span<const VertexSet> sets) {
  json out = json::array();
  for (const VertexSet& s : sets) out.push_back(s.members());
  return out;
}

oracle::SearchBudget budget_from(int max_n, long long time_cap_ms) {
  oracle::SearchBudget b;
  if (max_n > 0) {
    b.max_n_two_class = max_n;
    b.max_n_multi_class = max_n;
    b.max_n_branch_and_bound = max_n;
  }
  b.time_cap = std::chrono::milliseconds(time_cap_ms);
  return b;
}

}  // namespace

int run_analyze(const AnalyzeArgs& args, const CommonArgs& common, RunManifest& manifest) {
  const Graph g = read_graph_input(args.input, manifest);
  const GraphStats stats = degree_stats(g);
  json j;
  j["n"] = g.order();
  j["m"] = g.num_edges();
  j["max_degree"] = stats.max_degree;
  j["min_degree"] = stats.min_degree;
  const int omega = clique_number(g);
  j["clique_number"] = omega;
  json counts = json::object();
  for (int t = 1; t <= std::max(1, args.max_t); ++t) counts[std::to_string(t)] = count_cliques(g, t, 0).count;
  j["clique_counts"] = counts;
  if (args.exact) {
    try {
      const auto alpha = oracle::exact_max_kpfree(g, 2);
      j["independence_number"] = alpha.size;
      j["maximum_independent_sets"] = alpha.optimum_count;
      const auto chi = oracle::exact_chromatic(g);
      j["chromatic_number"] = chi.chromatic_number;
    } catch (const BudgetExceeded& e) {
      j["exact_skipped"] = e.what();
      manifest.set_flag("budget_skipped", true);
    }
  }
  manifest.set_summary({{"n", g.order()}, {"max_degree", stats.max_degree}, {"clique_number", omega}});
  write_json(j, common.output);
  return kOk;
}

int run_generate(const GenerateArgs& args, const CommonArgs& common, RunManifest& manifest) {
  const auto family = parse_family(args.family);
  if (!family) throw InputError("unknown family '" + args.family + "'");
  FamilySpec spec;
  spec.family = *family;
  spec.n = args.n;
  spec.edge_probability = args.edge_probability;
  spec.seed = common.seed;
  spec.clique_size = args.clique_size;
  spec.cliques = args.cliques;
  spec.max_degree = args.max_degree;
  for (const std::string& f : args.factors) spec.factors.push_back(parse_factor(f));
  manifest.set_seed(common.seed);
  const Graph g = generate(spec);
  if (common.output) {
    save_graph(*common.output, g);
  } else {
    std::cout << to_edge_list(g);
  }
  manifest.set_summary({{"n", g.order()},
                        {"m", g.num_edges()},
                        {"max_degree", degree_stats(g).max_degree},
                        {"clique_number", clique_number(g)}});
  return kOk;
}

int run_partition(const PartitionArgs& args, const CommonArgs& common, RunManifest& manifest) {
  const Graph g = read_graph_input(args.input, manifest);
  const PartitionSpec spec = PartitionSpec::parse(args.spec);
  PartitionOptions options;
  options.record_trace = args.trace;
  if (args.seed_policy == "first") {
    options.seed_policy = SeedPolicy::FamilyFirst;
  } else if (args.seed_policy == "min-kq") {
    options.seed_policy = SeedPolicy::FamilyMinKq;
  } else if (args.seed_policy == "max-kq") {
    options.seed_policy = SeedPolicy::FamilyMaxKq;
  } else {
    throw InputError("unknown seed policy '" + args.seed_policy + "'");
  }

  Partition part;
  json extra = json::object();
  if (args.max_first) {
    MaxFirstResult r = spec.k() == 2 ? max_kpfree_partition(g, spec[0], spec[1], options)
                                     : partition_k_with_max_first(g, spec, options);
    part = std::move(r.partition);
    extra["class1_size"] = r.class1_size;
    extra["maximum_certified"] = part.meta.maximum_certified;
    json loops = json::array();
    for (const ExchangeTrace& t : r.traces)
      loops.push_back({{"swaps", t.swaps.size()},
                       {"segments", t.segments},
                       {"cap_hit", t.cap_hit},
                       {"stalled", t.stalled},
                       {"complement_kq_free", t.complement_kq_free}});
    extra["exchange"] = loops;
  } else {
    part = partition_k(g, spec, options);
  }

  json j;
  j["n"] = g.order();
  j["spec"] = part.orders;
  j["classes"] = sets_to_json(part.classes);
  j["certified"] = part.meta.certified;
  j["fallback_used"] = part.meta.fallback_used;
  j["fallback_count"] = part.meta.fallback_count;
  for (auto& [k, v] : extra.items()) j[k] = v;
  if (args.trace) j["trace"] = part.meta.trace;
  manifest.set_arg("spec", spec.to_string());
  manifest.set_summary({{"certified", part.meta.certified}, {"class_sizes", [&] {
                          json s = json::array();
                          for (const VertexSet& c : part.classes) s.push_back(c.size());
                          return s;
                        }()}});
  manifest.set_flag("fallback_used", part.meta.fallback_used);
  write_json(j, common.output);
  return kOk;
}

int run_verify(const VerifyArgs& args, const CommonArgs& common, RunManifest& manifest) {
  const Graph g = read_graph_input(args.input, manifest);
  const std::string text = read_file(args.partition);
  manifest.add_input(args.partition, text);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("partition file is not JSON: ") + e.what());
  }
  if (!doc.contains("spec") || !doc.contains("classes")) throw InputError("partition JSON needs 'spec' and 'classes'");
  const auto orders = doc["spec"].get<std::vector<int>>();
  std::vector<VertexSet> classes;
  for (const auto& c : doc["classes"]) {
    VertexSet s(g.order());
    for (int v : c.get<std::vector<int>>()) {
      if (v < 0 || v >= g.order()) throw InputError("vertex " + std::to_string(v) + " out of range");
      if (s.contains(v)) throw InputError("vertex " + std::to_string(v) + " listed twice in one class");
      s.insert(v);
    }
    classes.push_back(std::move(s));
  }
  if (doc.contains("n") && doc["n"].get<int>() != g.order()) throw InputError("partition is for a different n");
  if (orders.size() != classes.size()) throw InputError("spec and classes differ in length");

  std::optional<std::string> problem = check_partition(g, orders, classes);
  // Second opinion from the mask-based counter.
  if (!problem && g.order() <= 64) {
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (oracle::count_cliques_mask(g, classes[i], orders[i]) != 0) {
        problem = "class " + std::to_string(i) + " contains K_" + std::to_string(orders[i]) + " (mask counter)";
        break;
      }
  }
  json j;
  j["valid"] = !problem.has_value();
  if (problem) j["problem"] = *problem;
  manifest.set_summary({{"valid", !problem.has_value()}});
  write_json(j, common.output);
  return problem ? kCertification : kOk;
}

int run_oracle(const OracleArgs& args, const CommonArgs& common, RunManifest& manifest) {
  const Graph g = read_graph_input(args.input, manifest);
  const oracle::SearchBudget budget = budget_from(args.max_n, args.time_cap_ms);
  json j;
  if (args.mode == "exists") {
    if (args.spec.empty()) throw InputError("oracle exists needs --spec");
    const PartitionSpec spec = PartitionSpec::parse(args.spec);
    manifest.set_arg("spec", spec.to_string());
    const auto r = oracle::exists_partition(g, spec, budget);
    j["exists"] = r.exists;
    j["spec"] = std::vector<int>(spec.parts().begin(), spec.parts().end());
    j["nodes"] = r.nodes;
    j["vertex_order"] = r.vertex_order;
    if (r.exists) j["classes"] = sets_to_json(r.classes(g.order(), spec.k()));
    manifest.set_summary({{"exists", r.exists}, {"nodes", r.nodes}});
  } else if (args.mode == "maxset") {
    manifest.set_arg("p", args.p);
    const auto r = oracle::exact_max_kpfree(g, args.p, budget);
    j["p"] = args.p;
    j["size"] = r.size;
    j["witness"] = r.witness.members();
    j["optimum_count"] = r.optimum_count;
    j["nodes"] = r.nodes;
    manifest.set_summary({{"size", r.size}, {"optimum_count", r.optimum_count}});
  } else if (args.mode == "chromatic") {
    const auto r = oracle::exact_chromatic(g, budget);
    j["chromatic_number"] = r.chromatic_number;
    j["coloring"] = r.coloring;
    j["nodes"] = r.nodes;
    manifest.set_summary({{"chromatic_number", r.chromatic_number}});
  } else {
    throw InputError("unknown oracle mode '" + args.mode + "'");
  }
  write_json(j, common.output);
  return kOk;
}

}  // namespace kpfree::cli
