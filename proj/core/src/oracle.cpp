#include "keyring/oracle.hpp"

#include <algorithm>

namespace keyring {

std::optional<Keyring> oracle_find_keyring(const Graph& g, int k, int r,
                                           const SearchLimits& limits) {
  if (k < 3) throw InvalidInput("oracle_find_keyring: k must be at least 3");
  if (r < 0) throw InvalidInput("oracle_find_keyring: negative leaf count");
  std::optional<Keyring> found;
  for (Vertex u = 0; u < g.order() && !found; ++u) {
    if (g.degree(u) < r + 2) continue;
    for_each_cycle_through(
        g, u,
        [&](const Cycle& c) {
          if (c.length() + r < k) return true;
          VertexSet on_cycle = c.vertices;
          std::sort(on_cycle.begin(), on_cycle.end());
          Keyring kr;
          kr.center = u;
          kr.cycle = c.vertices;
          for (Vertex w : g.neighbors(u)) {
            if (kr.leaf_count() == r) break;
            if (set_contains(on_cycle, w)) continue;
            kr.leaves.push_back(w);
          }
          if (kr.leaf_count() < r) return true;
          found = std::move(kr);
          return false;
        },
        limits);
  }
  return found;
}

bool oracle_exists_keyring(const Graph& g, int k, int r, const SearchLimits& limits) {
  return oracle_find_keyring(g, k, r, limits).has_value();
}

}  // namespace keyring
