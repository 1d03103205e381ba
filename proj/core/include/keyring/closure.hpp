#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "keyring/cycle_search.hpp"
#include "keyring/graph.hpp"

namespace keyring {

/// Vertex set grown from a seed cycle by path absorption until no connected
/// component of G - H attaches to two or more vertices of H (the fixpoint
/// condition). The seed is retained for audits.
struct ClosureSet {
  VertexSet vertices;
  Cycle seed;
};

/// Ordered collection of pairwise-disjoint closure sets over one host graph.
/// Members are kept sorted by their smallest vertex.
struct ClosureFamily {
  int k = 0;
  std::vector<ClosureSet> members;

  VertexSet covered() const;
};

struct PropertyACheck {
  bool holds = false;
  Vertex failed = -1;           // first vertex without a witness, when !holds
  std::vector<Cycle> witnesses;  // aligned with x while the check succeeds
};

struct PropertyBCheck {
  bool holds = false;
  std::pair<Vertex, Vertex> failed{-1, -1};
  std::vector<Path> witnesses;  // unordered pairs in lexicographic order
};

/// Does every vertex of x lie on a cycle of length >= ceil(k/2) inside G[x]?
PropertyACheck check_property_a(const Graph& g, const VertexSet& x, int k,
                                const SearchLimits& limits = {});

/// Is every pair of x joined inside G[x] by a path of length >= ceil(k/2)?
PropertyBCheck check_property_b(const Graph& g, const VertexSet& x, int k,
                                const SearchLimits& limits = {});

struct Absorption {
  VertexSet component;
  Vertex attach_a = -1;
  Vertex attach_b = -1;
  Path witness;  // attach_a .. attach_b with all internal vertices in component
};

/// Finds a component of G - x attached to two or more vertices of x, with a
/// witness path whose absorption enlarges x. Deterministic: lowest-indexed
/// component, lexicographically least attachment pair, BFS-shortest witness.
std::optional<Absorption> absorbable_component(const Graph& g, const VertexSet& x);

/// Repeated path absorption starting from the seed's vertex set.
/// The seed must be a valid cycle of length >= k in g.
ClosureSet close_under_paths(const Graph& g, const Cycle& seed, int k);

/// Inserts `fresh` into the family, merging it with every member it comes to
/// intersect and re-absorbing until all family invariants hold again.
ClosureFamily merge_family(const Graph& g, const ClosureFamily& family,
                           const ClosureSet& fresh);

/// Audit helpers used by tests and the stress harness.
bool closure_fixpoint_ok(const Graph& g, const ClosureSet& cs);
bool closure_set_ok(const Graph& g, const ClosureSet& cs, int k, std::string* reason = nullptr);
bool family_invariants_ok(const Graph& g, const ClosureFamily& family,
                          std::string* reason = nullptr);

}  // namespace keyring
