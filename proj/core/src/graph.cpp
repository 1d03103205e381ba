#include "keyring/graph.hpp"

#include <algorithm>

namespace keyring {

Graph::Graph(int n, const EdgeList& edges) : n_(n) {
  if (n < 0) throw InvalidInput("vertex count must be nonnegative");
  adj_.resize(static_cast<std::size_t>(n));
  EdgeList normalized;
  normalized.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") has endpoint outside 0.." + std::to_string(n - 1));
    if (u > v) std::swap(u, v);
    normalized.emplace_back(u, v);
  }
  std::sort(normalized.begin(), normalized.end());
  auto dup = std::adjacent_find(normalized.begin(), normalized.end());
  if (dup != normalized.end())
    throw InvalidInput("duplicate edge (" + std::to_string(dup->first) + "," +
                       std::to_string(dup->second) + ")");
  edges_ = std::move(normalized);
  for (auto [u, v] : edges_) {
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

void Graph::check_vertex(Vertex u) const {
  if (!has_vertex(u))
    throw InvalidInput("vertex " + std::to_string(u) + " out of range 0.." +
                       std::to_string(n_ - 1));
}

int Graph::degree(Vertex u) const {
  check_vertex(u);
  return static_cast<int>(adj_[static_cast<std::size_t>(u)].size());
}

const std::vector<Vertex>& Graph::neighbors(Vertex u) const {
  check_vertex(u);
  return adj_[static_cast<std::size_t>(u)];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& list = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

Vertex InducedSubgraph::to_local(Vertex host) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), host);
  if (it == vertices.end() || *it != host) return -1;
  return static_cast<Vertex>(it - vertices.begin());
}

bool is_dense(const Graph& g, int k) {
  if (k < 2) throw InvalidInput("density parameter k must be at least 2");
  return 2LL * g.size() > static_cast<long long>(k - 1) * g.order();
}

void require_vertex_set(const Graph& g, const VertexSet& x, const std::string& what) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!g.has_vertex(x[i]))
      throw InvalidInput(what + ": vertex " + std::to_string(x[i]) + " out of range");
    if (i > 0 && x[i] <= x[i - 1])
      throw InvalidInput(what + ": vertex set must be sorted and duplicate-free");
  }
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x) {
  require_vertex_set(g, x, "induced_subgraph");
  InducedSubgraph result;
  result.vertices = x;
  EdgeList edges;
  for (auto [u, v] : g.edges()) {
    Vertex lu = result.to_local(u);
    if (lu < 0) continue;
    Vertex lv = result.to_local(v);
    if (lv < 0) continue;
    edges.emplace_back(lu, lv);
  }
  result.graph = Graph(static_cast<int>(x.size()), edges);
  return result;
}

EdgeList crossing_edges(const Graph& g, const VertexSet& x, const VertexSet& y) {
  require_vertex_set(g, x, "crossing_edges");
  require_vertex_set(g, y, "crossing_edges");
  if (sets_intersect(x, y)) throw InvalidInput("crossing_edges: sets overlap");
  EdgeList result;
  for (auto [u, v] : g.edges()) {
    bool ux = set_contains(x, u), vx = set_contains(x, v);
    bool uy = set_contains(y, u), vy = set_contains(y, v);
    if ((ux && vy) || (uy && vx)) result.emplace_back(u, v);
  }
  return result;  // already sorted: g.edges() is
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool sets_intersect(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return false;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool set_contains(const VertexSet& a, Vertex v) {
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> components;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> queue;
  for (Vertex start = 0; start < g.order(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    VertexSet comp;
    queue.clear();
    queue.push_back(start);
    seen[static_cast<std::size_t>(start)] = 1;
    while (!queue.empty()) {
      Vertex u = queue.back();
      queue.pop_back();
      comp.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  EdgeList edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph(a.order() + b.order(), edges);
}

}  // namespace keyring
