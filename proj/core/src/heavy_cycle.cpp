#include "keyring/heavy_cycle.hpp"

#include <algorithm>
#include <map>

namespace keyring {

namespace {

std::vector<int> member_index_map(const Graph& g, const ClosureFamily& family) {
  std::vector<int> member_of(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < family.members.size(); ++i)
    for (Vertex v : family.members[i].vertices)
      member_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
  return member_of;
}

void audit_family(const Graph& g, const ClosureFamily& family, const EngineOptions& opts,
                  EngineStats* stats) {
  if (opts.audit_structure) {
    std::string why;
    for (std::size_t i = 0; i < family.members.size(); ++i) {
      if (!closure_set_ok(g, family.members[i], family.k, &why))
        throw InternalError("closure audit failed on member " + std::to_string(i) +
                            ": " + why);
    }
    if (!family_invariants_ok(g, family, &why))
      throw InternalError("family audit failed: " + why);
    if (stats) ++stats->structure_audits;
  }
  if (opts.audit_properties) {
    for (std::size_t i = 0; i < family.members.size(); ++i) {
      const auto& member = family.members[i];
      if (!check_property_a(g, member.vertices, family.k, opts.limits).holds)
        throw InternalError("property (a) audit failed on member " + std::to_string(i));
      if (member.vertices.size() >= 2 &&
          !check_property_b(g, member.vertices, family.k, opts.limits).holds)
        throw InternalError("property (b) audit failed on member " + std::to_string(i));
    }
    if (stats) ++stats->property_audits;
  }
}

}  // namespace

std::pair<Vertex, Vertex> ContractedGraph::provenance_of(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  const auto& list = graph.edges();
  auto it = std::lower_bound(list.begin(), list.end(), std::make_pair(a, b));
  if (it == list.end() || *it != std::make_pair(a, b))
    throw InvalidInput("provenance_of: no contracted edge (" + std::to_string(a) + "," +
                       std::to_string(b) + ")");
  return provenance[static_cast<std::size_t>(it - list.begin())];
}

bool witness_valid(const Graph& g, const HeavyCycleWitness& w, std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  std::string why;
  if (!cycle_valid_in(g, w.cycle, &why)) return fail(why);
  if (!w.cycle.contains(w.center)) return fail("center not on the cycle");
  if (w.cycle.length() < ceil_half(w.k))
    return fail("cycle shorter than ceil(k/2) = " + std::to_string(ceil_half(w.k)));
  if (g.degree(w.center) < w.k - 1)
    return fail("center degree " + std::to_string(g.degree(w.center)) + " below k-1");
  return true;
}

ClosureFamily build_residual_closures(const Graph& g, int k, ClosureFamily family,
                                      const EngineOptions& opts, EngineStats* stats) {
  family.k = k;
  VertexSet all(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
  while (true) {
    VertexSet residual = set_difference(all, family.covered());
    if (static_cast<int>(residual.size()) < k) break;
    InducedSubgraph sub = induced_subgraph(g, residual);
    auto cycle = find_long_cycle(sub.graph, k, opts.limits);
    if (!cycle) break;
    for (Vertex& v : cycle->vertices) v = sub.to_host(v);
    if (stats) ++stats->residual_seeds;
    ClosureSet fresh = close_under_paths(g, *cycle, k);
    family = merge_family(g, family, fresh);
    if (stats) ++stats->merges;
    audit_family(g, family, opts, stats);
  }
  return family;
}

std::optional<std::pair<int, Vertex>> heavy_vertex_scan(const Graph& g, int k,
                                                        const ClosureFamily& family) {
  for (std::size_t i = 0; i < family.members.size(); ++i)
    for (Vertex u : family.members[i].vertices)
      if (g.degree(u) >= k - 1) return std::make_pair(static_cast<int>(i), u);
  return std::nullopt;
}

ContractedGraph contract(const Graph& g, int k, const ClosureFamily& family,
                         const ContractOptions& opts) {
  std::string why;
  if (!family_invariants_ok(g, family, &why))
    throw InvalidInput("contract: family invariants do not hold: " + why);

  const int m = static_cast<int>(family.members.size());
  std::vector<int> member_of = member_index_map(g, family);

  ContractedGraph cg;
  cg.super_count = m;
  std::vector<int> plain_node(static_cast<std::size_t>(g.order()), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (member_of[static_cast<std::size_t>(v)] < 0) {
      plain_node[static_cast<std::size_t>(v)] = m + static_cast<int>(cg.plain_vertices.size());
      cg.plain_vertices.push_back(v);
    }
  }

  std::vector<long long> internal_edges(static_cast<std::size_t>(m), 0);
  std::map<std::pair<Vertex, Vertex>, std::pair<Vertex, Vertex>> contracted;
  for (auto [u, v] : g.edges()) {
    int mu = member_of[static_cast<std::size_t>(u)];
    int mv = member_of[static_cast<std::size_t>(v)];
    if (mu >= 0 && mu == mv) {
      ++internal_edges[static_cast<std::size_t>(mu)];
      continue;
    }
    Vertex a = mu >= 0 ? mu : plain_node[static_cast<std::size_t>(u)];
    Vertex b = mv >= 0 ? mv : plain_node[static_cast<std::size_t>(v)];
    if (a > b) {
      std::swap(a, b);
      std::swap(u, v);
    }
    auto [it, inserted] = contracted.emplace(std::make_pair(a, b), std::make_pair(u, v));
    if (!inserted)
      throw InternalError("contract: duplicate contracted edge (" + std::to_string(a) +
                          "," + std::to_string(b) + "); family invariants broken");
  }

  EdgeList edges;
  edges.reserve(contracted.size());
  cg.provenance.reserve(contracted.size());
  for (const auto& [edge, host_edge] : contracted) {
    edges.push_back(edge);
    cg.provenance.push_back(host_edge);
  }
  cg.graph = Graph(m + static_cast<int>(cg.plain_vertices.size()), edges);

  if (opts.check_density_chain) {
    for (int i = 0; i < m; ++i) {
      long long h = static_cast<long long>(family.members[static_cast<std::size_t>(i)].vertices.size());
      if (h < k)
        throw InternalError("density chain: member " + std::to_string(i) +
                            " has fewer than k vertices");
      if (2 * internal_edges[static_cast<std::size_t>(i)] > (k - 2) * h)
        throw InternalError("density chain: member " + std::to_string(i) +
                            " exceeds the (k-2)|H|/2 internal edge bound");
    }
    long long nodes = cg.graph.order();
    if (2LL * cg.graph.size() <= static_cast<long long>(k - 1) * nodes)
      throw InternalError("density chain: contracted graph is not dense: 2*" +
                          std::to_string(cg.graph.size()) + " <= (k-1)*" +
                          std::to_string(nodes));
  }
  return cg;
}

Cycle lift_cycle(const Graph& g, const ClosureFamily& family, const ContractedGraph& cg,
                 const Cycle& contracted, const SearchLimits& limits) {
  std::string why;
  if (!cycle_valid_in(cg.graph, contracted, &why))
    throw InvalidInput("lift_cycle: contracted cycle invalid: " + why);

  std::vector<int> member_of = member_index_map(g, family);
  auto member_endpoint = [&](std::pair<Vertex, Vertex> host_edge, int member) {
    if (member_of[static_cast<std::size_t>(host_edge.first)] == member)
      return host_edge.first;
    if (member_of[static_cast<std::size_t>(host_edge.second)] == member)
      return host_edge.second;
    throw InternalError("lift_cycle: provenance edge does not touch its member");
  };

  const auto& seq = contracted.vertices;
  const std::size_t t = seq.size();
  std::vector<Vertex> lifted;
  for (std::size_t j = 0; j < t; ++j) {
    Vertex node = seq[j];
    if (!cg.is_super(node)) {
      lifted.push_back(cg.plain_host(node));
      continue;
    }
    Vertex prev = seq[(j + t - 1) % t];
    Vertex next = seq[(j + 1) % t];
    int member = node;
    Vertex entry = member_endpoint(cg.provenance_of(prev, node), member);
    Vertex exit = member_endpoint(cg.provenance_of(node, next), member);
    if (entry == exit) {
      lifted.push_back(entry);
      continue;
    }
    const auto& h = family.members[static_cast<std::size_t>(member)].vertices;
    InducedSubgraph sub = induced_subgraph(g, h);
    auto path = find_long_path_between(sub.graph, sub.to_local(entry), sub.to_local(exit),
                                       ceil_half(family.k), limits);
    if (!path)
      throw InternalError("lift_cycle: no within-member path of length ceil(k/2); "
                          "property (b) violated");
    for (Vertex v : path->vertices) lifted.push_back(sub.to_host(v));
  }
  Cycle result{std::move(lifted)};
  if (!cycle_valid_in(g, result, &why))
    throw InternalError("lift_cycle: lifted sequence is not a cycle: " + why);
  return result;
}

HeavyCycleWitness find_heavy_cycle(const Graph& g, int k, const EngineOptions& opts,
                                   EngineStats* stats) {
  if (k < 3) throw InvalidInput("find_heavy_cycle: k must be at least 3");

  // A dense graph always has a dense component (otherwise summing
  // 2 e_c <= (k-1) n_c over components contradicts density); work there.
  InducedSubgraph comp_sub;
  bool found_component = false;
  for (const auto& comp : connected_components(g)) {
    InducedSubgraph sub = induced_subgraph(g, comp);
    if (is_dense(sub.graph, k)) {
      comp_sub = std::move(sub);
      found_component = true;
      break;
    }
  }
  if (!found_component)
    throw PreconditionError("find_heavy_cycle: no connected component satisfies "
                            "2e > (k-1)n");
  const Graph& host = comp_sub.graph;

  ClosureFamily family;
  family.k = k;
  long long prev_covered = -1;
  long long prev_members = 0;
  int iterations = 0;
  while (true) {
    family = build_residual_closures(host, k, std::move(family), opts, stats);
    const long long covered = static_cast<long long>(family.covered().size());
    const long long members = static_cast<long long>(family.members.size());
    if (members == 0)
      throw InternalError("find_heavy_cycle: dense component produced no closure");
    if (covered < prev_covered ||
        (covered == prev_covered && -members <= -prev_members))
      throw InternalError("find_heavy_cycle: loop made no progress");
    prev_covered = covered;
    prev_members = members;
    ++iterations;
    if (stats) stats->iterations = iterations;
    if (iterations > host.order() * static_cast<int>(members) + host.order())
      throw InternalError("find_heavy_cycle: iteration cap exceeded");

    if (auto hit = heavy_vertex_scan(host, k, family)) {
      if (stats) ++stats->scan_hits;
      auto [index, center] = *hit;
      const auto& member = family.members[static_cast<std::size_t>(index)].vertices;
      InducedSubgraph member_sub = induced_subgraph(host, member);
      auto cycle = find_cycle_through(member_sub.graph, member_sub.to_local(center),
                                      std::max(3, ceil_half(k)), opts.limits);
      if (!cycle)
        throw InternalError("find_heavy_cycle: no qualifying cycle through the heavy "
                            "vertex; property (a) violated");
      HeavyCycleWitness witness;
      witness.k = k;
      witness.center = comp_sub.to_host(center);
      for (Vertex v : cycle->vertices)
        witness.cycle.vertices.push_back(comp_sub.to_host(member_sub.to_host(v)));
      std::string why;
      if (!witness_valid(g, witness, &why))
        throw InternalError("find_heavy_cycle: produced witness fails validation: " + why);
      return witness;
    }

    ContractOptions copts;
    copts.check_density_chain = true;
    ContractedGraph cg = contract(host, k, family, copts);
    if (stats) {
      ++stats->contracts_built;
      ++stats->chain_checks;
    }
    auto contracted_cycle = find_long_cycle(cg.graph, k, opts.limits);
    if (!contracted_cycle)
      throw InternalError("find_heavy_cycle: contracted graph is dense but no cycle of "
                          "length k was found");
    Cycle lifted = lift_cycle(host, family, cg, *contracted_cycle, opts.limits);
    if (lifted.length() < k)
      throw InternalError("find_heavy_cycle: lifted cycle shorter than k");
    if (stats) ++stats->lifted_cycles;
    ClosureSet fresh = close_under_paths(host, lifted, k);
    family = merge_family(host, family, fresh);
    if (stats) ++stats->merges;
    audit_family(host, family, opts, stats);
  }
}

}  // namespace keyring
