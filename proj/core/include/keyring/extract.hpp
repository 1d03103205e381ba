#pragma once

#include <string>
#include <vector>

#include "keyring/cycle_search.hpp"
#include "keyring/graph.hpp"
#include "keyring/heavy_cycle.hpp"

namespace keyring {

/// Neighborhood of a cycle vertex split along the cycle: on_cycle lists the
/// neighbors in traversal order starting from the center (so the clockwise
/// labels u_1..u_t), off_cycle the remaining neighbors ascending.
struct NeighborSplit {
  Vertex center = -1;
  std::vector<Vertex> on_cycle;
  std::vector<Vertex> off_cycle;

  int t() const { return static_cast<int>(on_cycle.size()); }
  int s() const { return static_cast<int>(off_cycle.size()); }
};

/// A cycle with r pendant leaves attached to one of its vertices. Its edge
/// count equals cycle length + r, which also equals its vertex count.
struct Keyring {
  Vertex center = -1;
  std::vector<Vertex> cycle;
  std::vector<Vertex> leaves;

  int leaf_count() const { return static_cast<int>(leaves.size()); }
  int edge_count() const { return static_cast<int>(cycle.size() + leaves.size()); }
  int vertex_count() const { return edge_count(); }
};

NeighborSplit split_neighbors(const Graph& g, const Cycle& c, Vertex u);

/// Builds a keyring with r leaves and at least k edges from a heavy-cycle
/// witness; requires ceil(k/2) <= r <= k-3.
Keyring extract_keyring(const Graph& g, const HeavyCycleWitness& w, int r);

/// Full pipeline: heavy-cycle search followed by extraction. Requires a
/// dense input and ceil(k/2) <= r <= k-3.
Keyring extract(const Graph& g, int k, int r, const EngineOptions& opts = {},
                EngineStats* stats = nullptr);

/// Keyring with any leaf count 0 <= r <= k-3: r = 0 wraps a long cycle,
/// large r runs the constructive pipeline, the remaining range falls back to
/// the exhaustive oracle.
Keyring find_keyring_any_r(const Graph& g, int k, int r, const EngineOptions& opts = {});

/// Checks every keyring invariant against g plus |leaves| = r and
/// edge count >= k. A false result carries a diagnostic reason.
bool verify_keyring(const Graph& g, const Keyring& kr, int k, int r,
                    std::string* reason = nullptr);

}  // namespace keyring
