#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kpfree/graph.hpp"
#include "manifest.hpp"

namespace kpfree::cli {

enum ExitCode { kOk = 0, kInputError = 2, kBudget = 3, kCertification = 4 };

struct CommonArgs {
  std::optional<std::string> output;
  std::uint64_t seed = 1;
};

/// Reads a graph file (format from the extension) and records it in the manifest.
Graph read_graph_input(const std::string& path, RunManifest& manifest);
std::string read_file(const std::string& path);
/// Pretty JSON to the output path, or stdout.
void write_json(const nlohmann::json& j, const std::optional<std::string>& output);

struct AnalyzeArgs {
  std::string input;
  int max_t = 5;
  bool exact = true;
};
int run_analyze(const AnalyzeArgs& args, const CommonArgs& common, RunManifest& manifest);

struct GenerateArgs {
  std::string family;
  int n = 0;
  double edge_probability = 0.5;
  int clique_size = 0;
  int cliques = 1;
  int max_degree = 0;
  std::vector<std::string> factors;
};
int run_generate(const GenerateArgs& args, const CommonArgs& common, RunManifest& manifest);

struct PartitionArgs {
  std::string input;
  std::string spec;
  bool max_first = false;
  bool trace = false;
  std::string seed_policy = "first";
};
int run_partition(const PartitionArgs& args, const CommonArgs& common, RunManifest& manifest);

struct VerifyArgs {
  std::string input;
  std::string partition;
};
int run_verify(const VerifyArgs& args, const CommonArgs& common, RunManifest& manifest);

struct OracleArgs {
  std::string mode;  // exists | maxset | chromatic
  std::string input;
  std::string spec;
  int p = 3;
  int max_n = 0;
  long long time_cap_ms = 0;
};
int run_oracle(const OracleArgs& args, const CommonArgs& common, RunManifest& manifest);

struct SearchArgs {
  std::string spec;
  int n_min = 1;
  int n_max = 8;
  int max_omega = -1;
  std::string mode = "exhaustive";
  int samples = 1000;
  double p_min = 0.3;
  double p_max = 1.0;
  bool include_named = false;
  bool allow_disconnected = false;
  int jobs = 1;
  int max_n = 0;
};
int run_search(const SearchArgs& args, const CommonArgs& common, RunManifest& manifest);

}  // namespace kpfree::cli
