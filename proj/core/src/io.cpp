#include "keyring/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace keyring {

Graph read_edge_list(std::istream& in) {
  EdgeList edges;
  long long header_n = -1;
  Vertex max_id = -1;
  std::string line;
  bool first_payload = true;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos || line[begin] == '#') continue;
    std::istringstream fields(line);
    if (first_payload) {
      first_payload = false;
      std::string tag;
      fields >> tag;
      if (tag == "n") {
        if (!(fields >> header_n) || header_n < 0)
          throw InvalidInput("line " + std::to_string(line_no) + ": bad header");
        continue;
      }
      fields.clear();
      fields.seekg(0);
    }
    long long u, v;
    if (!(fields >> u >> v) || u < 0 || v < 0)
      throw InvalidInput("line " + std::to_string(line_no) +
                         ": expected two nonnegative integers");
    std::string rest;
    if (fields >> rest)
      throw InvalidInput("line " + std::to_string(line_no) + ": trailing tokens");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    max_id = std::max({max_id, static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  int n = header_n >= 0 ? static_cast<int>(header_n) : max_id + 1;
  return Graph(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << "n " << g.order() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot open " + path + " for writing");
  write_edge_list(g, out);
}

}  // namespace keyring
