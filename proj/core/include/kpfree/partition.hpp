#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kpfree/graph.hpp"

namespace kpfree {

/// Forbidden clique orders p_1 >= p_2 >= ... >= p_k >= 2, one per class.
class PartitionSpec {
 public:
  /// Throws InputError unless non-empty, non-increasing, every entry >= 2.
  explicit PartitionSpec(std::vector<int> parts);
  /// "4,3,2"
  static PartitionSpec parse(std::string_view text);

  int k() const noexcept { return static_cast<int>(parts_.size()); }
  std::span<const int> parts() const noexcept { return parts_; }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  int sum() const noexcept;
  /// The Δ for which Σ p_i = Δ - 1 + k.
  int matching_max_degree() const noexcept { return sum() + 1 - k(); }
  bool valid_for(const Graph& g) const;
  std::string to_string() const;

  friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;

 private:
  std::vector<int> parts_;
};

struct PartitionMeta {
  bool certified = false;
  /// Set when any piece came from exact search rather than the constructive route.
  bool fallback_used = false;
  int fallback_count = 0;
  /// Set when class 1 is certified to be a maximum K_{p_1}-free set.
  bool maximum_certified = false;
  std::vector<std::string> trace;
};

struct Partition {
  std::vector<int> orders;  // clique order forbidden in each class
  std::vector<VertexSet> classes;
  PartitionMeta meta;

  /// class_of()[v] = index of the class holding v.
  std::vector<int> class_of() const;
};

/// Checks cover, disjointness and per-class K_{orders[i]}-freeness. Returns the
/// first problem found, or nullopt when the partition is valid.
std::optional<std::string> check_partition(const Graph& g, std::span<const int> orders,
                                           std::span<const VertexSet> classes);

/// Runs check_partition and throws CertificationFailure on any problem; marks
/// the partition certified otherwise.
void certify(const Graph& g, Partition& partition);

}  // namespace kpfree
