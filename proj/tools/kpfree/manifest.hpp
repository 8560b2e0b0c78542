#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace kpfree::cli {

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t hash = 0xcbf29ce484222325ULL);
std::string hex64(std::uint64_t x);

/// Record of one command run. Everything except elapsed_ms is a function of
/// the inputs, so two runs with the same inputs give the same manifest body.
class RunManifest {
 public:
  explicit RunManifest(std::string command);

  void set_arg(const std::string& key, nlohmann::json value) { args_[key] = std::move(value); }
  /// Folds a file's bytes into the input hash.
  void add_input(const std::string& path, std::string_view bytes);
  void set_seed(std::uint64_t seed) { seed_ = seed; }
  void set_summary(nlohmann::json summary) { summary_ = std::move(summary); }
  void set_flag(const std::string& key, nlohmann::json value) { flags_[key] = std::move(value); }
  void set_exit(int code, std::string error);

  nlohmann::json to_json() const;
  /// <output>.manifest.json when an output path is set, stderr otherwise.
  void emit(const std::optional<std::string>& output_path) const;

 private:
  std::string command_;
  nlohmann::json args_ = nlohmann::json::object();
  nlohmann::json inputs_ = nlohmann::json::array();
  std::uint64_t input_hash_ = fnv1a("");
  std::optional<std::uint64_t> seed_;
  nlohmann::json summary_ = nlohmann::json::object();
  nlohmann::json flags_ = nlohmann::json::object();
  int exit_code_ = 0;
  std::string error_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace kpfree::cli
