#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "kpfree/graph.hpp"

namespace kpfree {

enum class GraphFormat { EdgeList, Dimacs };

// Edge list: first line "n m", then m lines "u v" with 0-based ids.
// DIMACS: "p edge n m" header, then m lines "e u v" with 1-based ids.
// Both accept comments ('#' anywhere in an edge list, 'c' lines in DIMACS)
// and blank lines. Parse failures throw ParseError with the line number.
Graph read_edge_list(std::istream& in);
Graph read_dimacs(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);
void write_dimacs(std::ostream& out, const Graph& g);

std::string to_edge_list(const Graph& g);
std::string to_dimacs(const Graph& g);

/// ".col" and ".dimacs" map to DIMACS, everything else to the edge list.
GraphFormat format_for_path(const std::filesystem::path& path);

Graph load_graph(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const Graph& g);

}  // namespace kpfree
