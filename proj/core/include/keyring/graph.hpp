#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "keyring/errors.hpp"

namespace keyring {

using Vertex = int;

/// Sorted list of distinct vertex ids.
using VertexSet = std::vector<Vertex>;

/// Normalized edge list: each pair stored (min, max), sorted ascending.
using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are normalized (smaller endpoint first) and kept sorted; adjacency
/// lists are ascending. Every search in the library relies on this ordering
/// for reproducible output.
class Graph {
 public:
  Graph() = default;

  /// Throws InvalidInput on self-loops, duplicate edges (after
  /// normalization), or endpoints outside 0..n-1.
  Graph(int n, const EdgeList& edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  int degree(Vertex u) const;
  const std::vector<Vertex>& neighbors(Vertex u) const;
  bool adjacent(Vertex u, Vertex v) const;
  bool has_vertex(Vertex u) const { return u >= 0 && u < n_; }

  const EdgeList& edges() const { return edges_; }

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  void check_vertex(Vertex u) const;

  int n_ = 0;
  EdgeList edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// Induced subgraph plus its vertex map: local id i corresponds to host
/// vertex vertices[i] (ascending), so host->local is a binary search.
struct InducedSubgraph {
  Graph graph;
  VertexSet vertices;

  Vertex to_host(Vertex local) const { return vertices[static_cast<std::size_t>(local)]; }
  Vertex to_local(Vertex host) const;  // -1 when absent
};

/// Exact density test 2 e(G) > (k-1) n, integer arithmetic throughout.
/// Throws InvalidInput for k < 2.
bool is_dense(const Graph& g, int k);

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x);

/// Edges with one endpoint in x and one in y. x and y must be disjoint.
EdgeList crossing_edges(const Graph& g, const VertexSet& x, const VertexSet& y);

/// Validates that x is sorted, duplicate-free and within range.
void require_vertex_set(const Graph& g, const VertexSet& x, const std::string& what);

// Set helpers; inputs must be sorted.
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool sets_intersect(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& a, Vertex v);

/// Connected components, each sorted, ordered by smallest contained vertex.
std::vector<VertexSet> connected_components(const Graph& g);

/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace keyring
