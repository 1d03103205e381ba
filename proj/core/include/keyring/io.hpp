#pragma once

#include <iosfwd>
#include <string>

#include "keyring/graph.hpp"

namespace keyring {

/// Edge-list text format: one edge per line, two whitespace-separated
/// nonnegative integers. Lines starting with '#' and blank lines are
/// ignored. The vertex count is 1 + max id unless the first payload line is
/// a header "n <count>".
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

/// Writes an "n <count>" header followed by the sorted edge list.
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace keyring
