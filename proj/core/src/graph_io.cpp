#include "kpfree/graph_io.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "kpfree/errors.hpp"

namespace kpfree {
namespace {

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

// Reads exactly `count` integers from `line`; nothing else may follow.
std::optional<std::vector<long long>> read_ints(std::istringstream& line, int count) {
  std::vector<long long> out;
  for (int i = 0; i < count; ++i) {
    long long x = 0;
    if (!(line >> x)) return std::nullopt;
    out.push_back(x);
  }
  std::string rest;
  if (line >> rest) return std::nullopt;
  return out;
}

void check_edge(long long u, long long v, long long n, int line_no) {
  if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(line_no, "vertex id out of range");
  if (u == v) throw ParseError(line_no, "self-loop");
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string raw;
  int line_no = 0;
  std::optional<long long> n;
  long long m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (blank(raw)) continue;
    std::istringstream line(raw);
    const auto ints = read_ints(line, 2);
    if (!ints) throw ParseError(line_no, n ? "expected \"u v\"" : "expected header \"n m\"");
    if (!n) {
      if ((*ints)[0] < 0 || (*ints)[1] < 0) throw ParseError(line_no, "negative header value");
      n = (*ints)[0];
      m = (*ints)[1];
      continue;
    }
    check_edge((*ints)[0], (*ints)[1], *n, line_no);
    edges.push_back({static_cast<Vertex>((*ints)[0]), static_cast<Vertex>((*ints)[1])});
  }
  if (!n) throw ParseError(line_no == 0 ? 1 : line_no, "missing header \"n m\"");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(line_no, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return Graph(static_cast<int>(*n), edges);
}

Graph read_dimacs(std::istream& in) {
  std::string raw;
  int line_no = 0;
  std::optional<long long> n;
  long long m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    if (blank(raw)) continue;
    std::istringstream line(raw);
    std::string tag;
    line >> tag;
    if (tag == "c") continue;
    if (tag == "p") {
      if (n) throw ParseError(line_no, "duplicate problem line");
      std::string kind;
      line >> kind;
      if (kind != "edge" && kind != "col") throw ParseError(line_no, "expected \"p edge n m\"");
      const auto ints = read_ints(line, 2);
      if (!ints || (*ints)[0] < 0 || (*ints)[1] < 0) throw ParseError(line_no, "expected \"p edge n m\"");
      n = (*ints)[0];
      m = (*ints)[1];
      continue;
    }
    if (tag == "e") {
      if (!n) throw ParseError(line_no, "edge before problem line");
      const auto ints = read_ints(line, 2);
      if (!ints) throw ParseError(line_no, "expected \"e u v\"");
      check_edge((*ints)[0] - 1, (*ints)[1] - 1, *n, line_no);
      edges.push_back({static_cast<Vertex>((*ints)[0] - 1), static_cast<Vertex>((*ints)[1] - 1)});
      continue;
    }
    throw ParseError(line_no, "unknown line type \"" + tag + "\"");
  }
  if (!n) throw ParseError(line_no == 0 ? 1 : line_no, "missing problem line \"p edge n m\"");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(line_no, "problem line declares " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  return Graph(static_cast<int>(*n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.order() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream s;
  write_edge_list(s, g);
  return s.str();
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream s;
  write_dimacs(s, g);
  return s.str();
}

GraphFormat format_for_path(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  return (ext == ".col" || ext == ".dimacs") ? GraphFormat::Dimacs : GraphFormat::EdgeList;
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return format_for_path(path) == GraphFormat::Dimacs ? read_dimacs(in) : read_edge_list(in);
}

void save_graph(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  if (format_for_path(path) == GraphFormat::Dimacs)
    write_dimacs(out, g);
  else
    write_edge_list(out, g);
}

}  // namespace kpfree
