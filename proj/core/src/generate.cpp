#include "keyring/generate.hpp"

#include <random>
#include <set>

namespace keyring {

Graph gen_random_dense(int n, int k, std::uint64_t seed) {
  if (k < 3) throw InvalidInput("gen_random_dense: k must be at least 3");
  if (n < k) throw InvalidInput("gen_random_dense: need n >= k");
  if (static_cast<long long>(k - 1) * n >= static_cast<long long>(n) * (n - 1))
    throw InvalidInput("gen_random_dense: density threshold infeasible for n = " +
                       std::to_string(n) + ", k = " + std::to_string(k));
  std::mt19937_64 rng(seed);
  std::set<std::pair<Vertex, Vertex>> edges;
  // Modulo draw keeps the stream identical across standard libraries; the
  // slight bias is irrelevant for a fixture generator.
  auto draw = [&]() { return static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n)); };
  while (2LL * static_cast<long long>(edges.size()) <=
         static_cast<long long>(k - 1) * n) {
    Vertex u = draw();
    Vertex v = draw();
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    edges.emplace(u, v);
  }
  return Graph(n, EdgeList(edges.begin(), edges.end()));
}

Graph make_clique(int n) {
  if (n < 1) throw InvalidInput("make_clique: need n >= 1");
  EdgeList edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph make_cycle(int n) {
  if (n < 3) throw InvalidInput("make_cycle: need n >= 3");
  EdgeList edges;
  for (Vertex u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
  return Graph(n, edges);
}

Graph make_wheel(int rim) {
  if (rim < 3) throw InvalidInput("make_wheel: need rim >= 3");
  EdgeList edges;
  for (Vertex i = 1; i <= rim; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, i == rim ? 1 : i + 1);
  }
  return Graph(rim + 1, edges);
}

Graph make_figure_eight(int a, int b) {
  if (a < 3 || b < 3) throw InvalidInput("make_figure_eight: cycles need length >= 3");
  EdgeList edges;
  for (Vertex i = 0; i < a; ++i) edges.emplace_back(i, (i + 1) % a);
  // Second cycle reuses vertex 0 and occupies a..a+b-2.
  edges.emplace_back(0, a);
  for (Vertex i = 0; i + 1 < b - 1; ++i) edges.emplace_back(a + i, a + i + 1);
  edges.emplace_back(a + b - 2, 0);
  return Graph(a + b - 1, edges);
}

Graph make_cycle_with_pendants(int cycle_len, int pendants) {
  if (cycle_len < 3) throw InvalidInput("make_cycle_with_pendants: cycle needs length >= 3");
  if (pendants < 0) throw InvalidInput("make_cycle_with_pendants: negative pendant count");
  EdgeList edges;
  for (Vertex i = 0; i < cycle_len; ++i) edges.emplace_back(i, (i + 1) % cycle_len);
  for (Vertex i = 0; i < pendants; ++i) edges.emplace_back(0, cycle_len + i);
  return Graph(cycle_len + pendants, edges);
}

Graph make_cycles_joined_by_edge(int a, int b) {
  Graph joined = disjoint_union(make_cycle(a), make_cycle(b));
  EdgeList edges = joined.edges();
  edges.emplace_back(0, a);
  return Graph(joined.order(), edges);
}

Graph gen_structured(const std::string& kind, const std::vector<int>& params) {
  auto want = [&](std::size_t count) {
    if (params.size() != count)
      throw InvalidInput("gen_structured: kind '" + kind + "' takes " +
                         std::to_string(count) + " parameter(s)");
  };
  if (kind == "clique") {
    want(1);
    return make_clique(params[0]);
  }
  if (kind == "cycle") {
    want(1);
    return make_cycle(params[0]);
  }
  if (kind == "wheel") {
    want(1);
    return make_wheel(params[0]);
  }
  if (kind == "figure_eight") {
    want(2);
    return make_figure_eight(params[0], params[1]);
  }
  if (kind == "cycle_with_pendants") {
    want(2);
    return make_cycle_with_pendants(params[0], params[1]);
  }
  if (kind == "disjoint_union") {
    want(2);
    return disjoint_union(make_cycle(params[0]), make_cycle(params[1]));
  }
  if (kind == "cycles_joined_by_edge") {
    want(2);
    return make_cycles_joined_by_edge(params[0], params[1]);
  }
  throw InvalidInput("gen_structured: unknown kind '" + kind + "'");
}

}  // namespace keyring
