#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "kpfree/errors.hpp"
#include "kpfree/version.hpp"

using namespace kpfree;
using namespace kpfree::cli;

int main(int argc, char** argv) {
  CLI::App app{"K_p-free partitions of bounded-degree graphs"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  CommonArgs common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", common.output, "Output file (stdout when omitted)");
    sub->add_option("--seed", common.seed, "Master seed for all randomness")->capture_default_str();
  };

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Degree, clique and exact coloring statistics");
  analyze_cmd->add_option("-i,--input", analyze.input, "Graph file (.el edge list, .col DIMACS)")->required();
  analyze_cmd->add_option("--max-t", analyze.max_t, "Count cliques of order 1..t")->capture_default_str();
  analyze_cmd->add_flag("!--no-exact", analyze.exact, "Skip independence and chromatic number");
  add_common(analyze_cmd);

  GenerateArgs generate;
  auto* generate_cmd = app.add_subcommand("generate", "Write a graph from a named family");
  generate_cmd->add_option("--family", generate.family,
                           "complete|cycle|path|strong_product|h1_figure|h0_pendant|random|planted|bounded")
      ->required();
  generate_cmd->add_option("-n,--n", generate.n, "Vertex count");
  generate_cmd->add_option("-p,--edge-probability", generate.edge_probability)->capture_default_str();
  generate_cmd->add_option("--clique-size", generate.clique_size);
  generate_cmd->add_option("--cliques", generate.cliques)->capture_default_str();
  generate_cmd->add_option("--max-degree", generate.max_degree);
  generate_cmd->add_option("--factor", generate.factors, "Strong product factor, e.g. C5 or K2 (give two)");
  add_common(generate_cmd);

  PartitionArgs partition;
  auto* partition_cmd = app.add_subcommand("partition", "Compute a certified K_{p_i}-free partition");
  partition_cmd->add_option("-i,--input", partition.input)->required();
  partition_cmd->add_option("--spec", partition.spec, "p1,p2,...,pk")->required();
  partition_cmd->add_flag("--max-first", partition.max_first, "Make class 1 a maximum K_{p1}-free set");
  partition_cmd->add_flag("--trace", partition.trace, "Include the construction trace");
  partition_cmd->add_option("--seed-policy", partition.seed_policy, "first|min-kq|max-kq")->capture_default_str();
  add_common(partition_cmd);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Re-certify a partition JSON against a graph");
  verify_cmd->add_option("-i,--input", verify.input)->required();
  verify_cmd->add_option("--partition", verify.partition)->required();
  add_common(verify_cmd);

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact brute-force answers");
  oracle_cmd->add_option("mode", oracle_args.mode, "exists|maxset|chromatic")->required();
  oracle_cmd->add_option("-i,--input", oracle_args.input)->required();
  oracle_cmd->add_option("--spec", oracle_args.spec, "For exists");
  oracle_cmd->add_option("--p", oracle_args.p, "For maxset")->capture_default_str();
  oracle_cmd->add_option("--max-n", oracle_args.max_n, "Override the vertex cap");
  oracle_cmd->add_option("--time-cap-ms", oracle_args.time_cap_ms, "0 = none");
  add_common(oracle_cmd);

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Sweep small graphs for specs with no valid partition");
  search_cmd->add_option("--spec", search.spec)->required();
  search_cmd->add_option("--n-min", search.n_min)->capture_default_str();
  search_cmd->add_option("--n-max", search.n_max)->capture_default_str();
  search_cmd->add_option("--max-omega", search.max_omega, "Default Δ-1");
  search_cmd->add_option("--mode", search.mode, "exhaustive|random")->capture_default_str();
  search_cmd->add_option("--samples", search.samples)->capture_default_str();
  search_cmd->add_option("--p-min", search.p_min)->capture_default_str();
  search_cmd->add_option("--p-max", search.p_max)->capture_default_str();
  search_cmd->add_flag("--include-named", search.include_named, "Also check the fixed graphs from the generators");
  search_cmd->add_flag("--allow-disconnected", search.allow_disconnected);
  search_cmd->add_option("--jobs", search.jobs)->capture_default_str();
  search_cmd->add_option("--max-n", search.max_n, "Override the oracle vertex cap");
  add_common(search_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  RunManifest manifest(chosen->get_name());
  manifest.set_arg("argv", std::vector<std::string>(argv + 1, argv + argc));
  int code = kOk;
  try {
    if (chosen == analyze_cmd) code = run_analyze(analyze, common, manifest);
    else if (chosen == generate_cmd) code = run_generate(generate, common, manifest);
    else if (chosen == partition_cmd) code = run_partition(partition, common, manifest);
    else if (chosen == verify_cmd) code = run_verify(verify, common, manifest);
    else if (chosen == oracle_cmd) code = run_oracle(oracle_args, common, manifest);
    else if (chosen == search_cmd) code = run_search(search, common, manifest);
    manifest.set_exit(code, "");
  } catch (const BudgetExceeded& e) {
    code = kBudget;
    manifest.set_exit(code, e.what());
  } catch (const ContractViolation& e) {
    code = kCertification;
    manifest.set_exit(code, e.what());
  } catch (const CertificationFailure& e) {
    code = kCertification;
    manifest.set_exit(code, e.what());
  } catch (const InputError& e) {
    code = kInputError;
    manifest.set_exit(code, e.what());
  } catch (const std::exception& e) {
    code = kCertification;
    manifest.set_exit(code, std::string("internal error: ") + e.what());
  }
  if (code != kOk) std::cerr << "error: " << manifest.to_json()["flags"].value("error", "") << "\n";
  manifest.emit(common.output);
  return code;
}
