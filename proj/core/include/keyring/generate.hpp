#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "keyring/graph.hpp"

namespace keyring {

/// Seeded uniform edge insertion until 2e > (k-1)n holds strictly.
/// Deterministic per (n, k, seed). Throws InvalidInput when the threshold is
/// infeasible (requires n > k >= 3).
Graph gen_random_dense(int n, int k, std::uint64_t seed);

// Canonically labeled fixture graphs.
Graph make_clique(int n);
Graph make_cycle(int n);
/// Hub is vertex 0, rim vertices 1..rim.
Graph make_wheel(int rim);
/// Two cycles of lengths a and b sharing vertex 0.
Graph make_figure_eight(int a, int b);
/// Cycle 0..cycle_len-1 plus `pendants` leaves attached at vertex 0.
Graph make_cycle_with_pendants(int cycle_len, int pendants);
/// Cycles of lengths a and b joined by the single edge (0, a).
Graph make_cycles_joined_by_edge(int a, int b);

/// Dispatch by kind name: clique N | cycle N | wheel RIM | figure_eight A B |
/// cycle_with_pendants C P | disjoint_union A B (two disjoint cycles) |
/// cycles_joined_by_edge A B.
Graph gen_structured(const std::string& kind, const std::vector<int>& params);

}  // namespace keyring
