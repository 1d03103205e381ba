#include "keyring/extract.hpp"

#include <algorithm>

#include "keyring/oracle.hpp"

namespace keyring {

NeighborSplit split_neighbors(const Graph& g, const Cycle& c, Vertex u) {
  std::string why;
  if (!cycle_valid_in(g, c, &why)) throw InvalidInput("split_neighbors: " + why);
  auto pos_it = std::find(c.vertices.begin(), c.vertices.end(), u);
  if (pos_it == c.vertices.end())
    throw InvalidInput("split_neighbors: vertex " + std::to_string(u) +
                       " not on the cycle");
  const std::size_t pos = static_cast<std::size_t>(pos_it - c.vertices.begin());
  const std::size_t len = c.vertices.size();

  NeighborSplit split;
  split.center = u;
  for (std::size_t i = 1; i < len; ++i) {
    Vertex w = c.vertices[(pos + i) % len];
    if (g.adjacent(u, w)) split.on_cycle.push_back(w);
  }
  VertexSet on_sorted = split.on_cycle;
  std::sort(on_sorted.begin(), on_sorted.end());
  for (Vertex w : g.neighbors(u))
    if (!set_contains(on_sorted, w)) split.off_cycle.push_back(w);
  return split;
}

namespace {

void require_leaf_range(int k, int r) {
  if (ceil_half(k) > k - 3)
    throw PreconditionError("leaf range ceil(k/2)..k-3 is empty for k = " +
                            std::to_string(k));
  if (r < ceil_half(k) || r > k - 3)
    throw PreconditionError("leaf count " + std::to_string(r) + " outside ceil(k/2)..k-3 = " +
                            std::to_string(ceil_half(k)) + ".." + std::to_string(k - 3));
}

}  // namespace

Keyring extract_keyring(const Graph& g, const HeavyCycleWitness& w, int r) {
  std::string why;
  if (!witness_valid(g, w, &why))
    throw InvalidInput("extract_keyring: witness fails validation: " + why);
  require_leaf_range(w.k, r);

  NeighborSplit split = split_neighbors(g, w.cycle, w.center);
  const int t = split.t();
  const int s = split.s();

  Keyring kr;
  kr.center = w.center;
  if (r <= s) {
    kr.cycle = w.cycle.vertices;
    kr.leaves.assign(split.off_cycle.begin(), split.off_cycle.begin() + r);
  } else {
    // r > s: close a shorter cycle through the (r-s+1)-th on-cycle neighbor
    // and harvest the skipped on-cycle neighbors as leaves. The witness
    // guarantees t + s >= k-1, so with r <= k-3 the index stays below t.
    if (r - s + 1 >= t)
      throw InternalError("extract_keyring: neighbor index r-s+1 not below t");
    Vertex anchor = split.on_cycle[static_cast<std::size_t>(r - s)];  // u_{r-s+1}
    const auto& seq = w.cycle.vertices;
    const std::size_t len = seq.size();
    const std::size_t upos = static_cast<std::size_t>(
        std::find(seq.begin(), seq.end(), w.center) - seq.begin());
    const std::size_t apos = static_cast<std::size_t>(
        std::find(seq.begin(), seq.end(), anchor) - seq.begin());
    kr.cycle.push_back(w.center);
    for (std::size_t i = apos; i != upos; i = (i + 1) % len) kr.cycle.push_back(seq[i]);
    if (kr.cycle.size() < 3)
      throw InternalError("extract_keyring: replacement cycle degenerated");
    kr.leaves = split.off_cycle;
    kr.leaves.insert(kr.leaves.end(), split.on_cycle.begin(),
                     split.on_cycle.begin() + (r - s));
    for (Vertex leaf : kr.leaves)
      if (std::find(kr.cycle.begin(), kr.cycle.end(), leaf) != kr.cycle.end())
        throw InternalError("extract_keyring: harvested leaf lies on the new cycle");
  }

  if (kr.edge_count() < w.k)
    throw InternalError("extract_keyring: produced keyring has fewer than k edges");
  if (!verify_keyring(g, kr, w.k, r, &why))
    throw InternalError("extract_keyring: produced keyring fails verification: " + why);
  return kr;
}

Keyring extract(const Graph& g, int k, int r, const EngineOptions& opts,
                EngineStats* stats) {
  require_leaf_range(k, r);
  if (!is_dense(g, k))
    throw PreconditionError("extract: input is not dense: 2e <= (k-1)n");
  HeavyCycleWitness w = find_heavy_cycle(g, k, opts, stats);
  return extract_keyring(g, w, r);
}

Keyring find_keyring_any_r(const Graph& g, int k, int r, const EngineOptions& opts) {
  if (k < 3) throw InvalidInput("find_keyring_any_r: k must be at least 3");
  if (r < 0 || r > k - 3)
    throw PreconditionError("leaf count " + std::to_string(r) + " outside 0..k-3");
  if (!is_dense(g, k))
    throw PreconditionError("find_keyring_any_r: input is not dense: 2e <= (k-1)n");
  if (r == 0) {
    auto cycle = find_long_cycle(g, k, opts.limits);
    if (!cycle)
      throw InternalError("find_keyring_any_r: dense graph without a cycle of length k");
    Keyring kr;
    kr.center = cycle->vertices.front();
    kr.cycle = cycle->vertices;
    return kr;
  }
  if (r >= ceil_half(k)) return extract(g, k, r, opts);
  auto kr = oracle_find_keyring(g, k, r, opts.limits);
  if (!kr)
    throw InternalError("find_keyring_any_r: exhaustive search found no keyring on a "
                        "dense input");
  return *kr;
}

bool verify_keyring(const Graph& g, const Keyring& kr, int k, int r,
                    std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  Cycle cycle{kr.cycle};
  std::string why;
  if (!cycle_valid_in(g, cycle, &why)) return fail("cycle: " + why);
  if (!cycle.contains(kr.center)) return fail("center not on the cycle");
  if (static_cast<int>(kr.leaves.size()) != r)
    return fail("leaf count " + std::to_string(kr.leaves.size()) + " differs from r = " +
                std::to_string(r));
  VertexSet sorted_leaves = kr.leaves;
  std::sort(sorted_leaves.begin(), sorted_leaves.end());
  if (std::adjacent_find(sorted_leaves.begin(), sorted_leaves.end()) != sorted_leaves.end())
    return fail("duplicate leaf");
  for (Vertex leaf : kr.leaves) {
    if (!g.has_vertex(leaf)) return fail("leaf " + std::to_string(leaf) + " out of range");
    if (cycle.contains(leaf))
      return fail("leaf " + std::to_string(leaf) + " lies on the cycle");
    if (!g.adjacent(kr.center, leaf))
      return fail("leaf " + std::to_string(leaf) + " not adjacent to the center");
  }
  if (kr.edge_count() < k)
    return fail("only " + std::to_string(kr.edge_count()) + " edges, need at least " +
                std::to_string(k));
  return true;
}

}  // namespace keyring
