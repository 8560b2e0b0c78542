#include "manifest.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "kpfree/rng.hpp"
#include "kpfree/version.hpp"

namespace kpfree::cli {

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t hash) {
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

RunManifest::RunManifest(std::string command) : command_(std::move(command)) {}

void RunManifest::add_input(const std::string& path, std::string_view bytes) {
  inputs_.push_back({{"path", path}, {"fnv1a64", hex64(fnv1a(bytes))}, {"bytes", bytes.size()}});
  input_hash_ = fnv1a(bytes, input_hash_);
}

void RunManifest::set_exit(int code, std::string error) {
  exit_code_ = code;
  error_ = std::move(error);
}

nlohmann::json RunManifest::to_json() const {
  nlohmann::json j;
  j["command"] = command_;
  j["version"] = std::string(kVersion);
  j["rng"] = std::string(kRandomEngineName);
  j["args"] = args_;
  j["inputs"] = inputs_;
  j["input_hash"] = "fnv1a64:" + hex64(input_hash_);
  j["seed"] = seed_ ? nlohmann::json(*seed_) : nlohmann::json(nullptr);
  j["summary"] = summary_;
  nlohmann::json flags = flags_;
  flags["exit_code"] = exit_code_;
  if (!error_.empty()) flags["error"] = error_;
  j["flags"] = flags;
  j["elapsed_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  return j;
}

void RunManifest::emit(const std::optional<std::string>& output_path) const {
  const std::string text = to_json().dump(2) + "\n";
  if (output_path) {
    std::ofstream out(*output_path + ".manifest.json", std::ios::binary);
    out << text;
    if (out) return;
  }
  std::cerr << text;
}

}  // namespace kpfree::cli
