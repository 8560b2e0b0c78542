#include "kpfree/partition.hpp"

#include <charconv>

#include "kpfree/cliques.hpp"
#include "kpfree/errors.hpp"

namespace kpfree {

PartitionSpec::PartitionSpec(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InputError("partition spec must have at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 2) throw InputError("every part of the spec must be >= 2");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InputError("spec parts must be non-increasing");
  }
}

PartitionSpec PartitionSpec::parse(std::string_view text) {
  std::vector<int> parts;
  while (!text.empty()) {
    const auto comma = text.find(',');
    auto token = text.substr(0, comma);
    while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) token.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
      throw InputError("bad spec entry \"" + std::string(token) + "\"");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw InputError("trailing comma in spec");
  }
  return PartitionSpec(std::move(parts));
}

int PartitionSpec::sum() const noexcept {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

bool PartitionSpec::valid_for(const Graph& g) const { return matching_max_degree() == degree_stats(g).max_degree; }

std::string PartitionSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<int> Partition::class_of() const {
  int n = classes.empty() ? 0 : classes.front().universe();
  std::vector<int> out(static_cast<std::size_t>(n), -1);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (Vertex v : classes[c]) out[static_cast<std::size_t>(v)] = static_cast<int>(c);
  return out;
}

std::optional<std::string> check_partition(const Graph& g, std::span<const int> orders,
                                           std::span<const VertexSet> classes) {
  if (orders.size() != classes.size())
    return "expected " + std::to_string(orders.size()) + " classes, got " + std::to_string(classes.size());
  VertexSet seen(g.order());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].universe() != g.order()) return "class " + std::to_string(i + 1) + " has the wrong universe";
    if (seen.intersects(classes[i])) return "class " + std::to_string(i + 1) + " overlaps an earlier class";
    seen |= classes[i];
    if (orders[i] < 1) return "class " + std::to_string(i + 1) + " has order < 1";
    if (contains_clique(g, classes[i], orders[i]))
      return "class " + std::to_string(i + 1) + " contains K_" + std::to_string(orders[i]);
  }
  if (seen.size() != g.order()) return "classes do not cover every vertex";
  return std::nullopt;
}

void certify(const Graph& g, Partition& partition) {
  if (auto problem = check_partition(g, partition.orders, partition.classes))
    throw CertificationFailure("partition failed certification: " + *problem);
  partition.meta.certified = true;
}

}  // namespace kpfree
