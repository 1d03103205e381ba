#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "keyring/graph.hpp"

namespace keyring {

/// Minimum integral length for a "length at least k/2" requirement.
inline constexpr int ceil_half(int k) { return (k + 1) / 2; }

/// Cycle as an ordered vertex sequence. The closing edge is implicit, so the
/// edge count equals the vertex count.
struct Cycle {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  bool contains(Vertex u) const;
  bool operator==(const Cycle&) const = default;
};

/// Simple path; length counts edges.
struct Path {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  bool operator==(const Path&) const = default;
};

/// Standalone validators, independent of how a sequence was produced.
bool cycle_valid_in(const Graph& g, const Cycle& c, std::string* reason = nullptr);
bool path_valid_in(const Graph& g, const Path& p, std::string* reason = nullptr);

/// Node-expansion cap for the exact searches. Hitting the cap throws
/// BudgetExceeded: an "absent" result is an exact claim, never a timeout.
struct SearchLimits {
  std::uint64_t max_expansions = 50'000'000;
};

/// First cycle of length >= min_length in smallest-vertex-rooted,
/// smallest-neighbor-first order, or absent if none exists.
std::optional<Cycle> find_long_cycle(const Graph& g, int min_length,
                                     const SearchLimits& limits = {});

/// Same search rooted at u; the returned cycle starts at u.
std::optional<Cycle> find_cycle_through(const Graph& g, Vertex u, int min_length,
                                        const SearchLimits& limits = {});

/// First u-v path with at least min_length edges, or absent.
std::optional<Path> find_long_path_between(const Graph& g, Vertex u, Vertex v,
                                           int min_length,
                                           const SearchLimits& limits = {});

/// Emits every cycle through u exactly once (up to rotation and reflection)
/// in deterministic order. The callback returns false to stop early.
void for_each_cycle_through(const Graph& g, Vertex u,
                            const std::function<bool(const Cycle&)>& fn,
                            const SearchLimits& limits = {});

/// Collects at most max_results cycles through u.
std::vector<Cycle> enumerate_cycles_through(const Graph& g, Vertex u,
                                            std::size_t max_results,
                                            const SearchLimits& limits = {});

}  // namespace keyring
