#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "keyring/closure.hpp"
#include "keyring/cycle_search.hpp"
#include "keyring/graph.hpp"

namespace keyring {

/// Quotient of the host graph: one supernode per family member, one plain
/// node per residual vertex. Node ids 0..m-1 are supernodes in family order,
/// m.. are plain nodes in ascending host order. Every contracted edge maps
/// back to the unique host edge that justifies it.
struct ContractedGraph {
  Graph graph;
  int super_count = 0;
  std::vector<Vertex> plain_vertices;
  std::vector<std::pair<Vertex, Vertex>> provenance;  // aligned with graph.edges()

  bool is_super(Vertex node) const { return node < super_count; }
  Vertex plain_host(Vertex node) const {
    return plain_vertices[static_cast<std::size_t>(node - super_count)];
  }
  int plain_count() const { return graph.order() - super_count; }
  std::pair<Vertex, Vertex> provenance_of(Vertex a, Vertex b) const;
};

/// A cycle of length >= ceil(k/2) through a vertex of degree >= k-1.
struct HeavyCycleWitness {
  Cycle cycle;
  Vertex center = -1;
  int k = 0;
};

bool witness_valid(const Graph& g, const HeavyCycleWitness& w,
                   std::string* reason = nullptr);

struct EngineOptions {
  SearchLimits limits;
  bool audit_structure = false;   // closure/family invariants after each merge
  bool audit_properties = false;  // full witness audits; small hosts only
};

struct EngineStats {
  int iterations = 0;
  int residual_seeds = 0;   // cycles found while exhausting the residual graph
  int scan_hits = 0;
  int contracts_built = 0;  // contractions performed after an absent scan
  int chain_checks = 0;     // density-chain assertions evaluated (all passed)
  int lifted_cycles = 0;
  int merges = 0;
  int structure_audits = 0;
  int property_audits = 0;
};

/// Absorbs every cycle of length >= k that still lives outside the family:
/// find one in the residual graph, close it in the full graph, merge, repeat
/// until the residual contains no such cycle.
ClosureFamily build_residual_closures(const Graph& g, int k, ClosureFamily family,
                                      const EngineOptions& opts = {},
                                      EngineStats* stats = nullptr);

/// Lowest-indexed member holding a vertex of degree >= k-1 (smallest such
/// vertex), or absent when all member vertices have degree <= k-2.
std::optional<std::pair<int, Vertex>> heavy_vertex_scan(const Graph& g, int k,
                                                        const ClosureFamily& family);

struct ContractOptions {
  /// Assert the counting chain: |H_i| >= k, 2 e(G[H_i]) <= (k-2)|H_i| and
  /// 2 e(G') > (k-1)|V(G')|. Only meaningful after an absent scan on a dense
  /// host; violations are internal errors.
  bool check_density_chain = false;
};

ContractedGraph contract(const Graph& g, int k, const ClosureFamily& family,
                         const ContractOptions& opts = {});

/// Expands a contracted cycle back into the host graph, replacing each
/// supernode by a within-member path (a single vertex when the entry and
/// exit coincide).
Cycle lift_cycle(const Graph& g, const ClosureFamily& family, const ContractedGraph& cg,
                 const Cycle& contracted, const SearchLimits& limits = {});

/// Certified search for a heavy cycle in any graph with a dense component.
HeavyCycleWitness find_heavy_cycle(const Graph& g, int k, const EngineOptions& opts = {},
                                   EngineStats* stats = nullptr);

}  // namespace keyring
