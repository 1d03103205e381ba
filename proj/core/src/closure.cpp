#include "keyring/closure.hpp"

#include <algorithm>

namespace keyring {

VertexSet ClosureFamily::covered() const {
  VertexSet all;
  for (const auto& member : members) all = set_union(all, member.vertices);
  return all;
}

PropertyACheck check_property_a(const Graph& g, const VertexSet& x, int k,
                                const SearchLimits& limits) {
  if (x.empty()) throw InvalidInput("check_property_a: empty vertex set");
  PropertyACheck result;
  InducedSubgraph sub = induced_subgraph(g, x);
  int need = ceil_half(k);
  for (Vertex local = 0; local < sub.graph.order(); ++local) {
    auto cycle = find_cycle_through(sub.graph, local, std::max(3, need), limits);
    if (!cycle) {
      result.failed = sub.to_host(local);
      return result;
    }
    for (Vertex& v : cycle->vertices) v = sub.to_host(v);
    result.witnesses.push_back(std::move(*cycle));
  }
  result.holds = true;
  return result;
}

PropertyBCheck check_property_b(const Graph& g, const VertexSet& x, int k,
                                const SearchLimits& limits) {
  if (x.size() < 2) throw InvalidInput("check_property_b: need at least two vertices");
  PropertyBCheck result;
  InducedSubgraph sub = induced_subgraph(g, x);
  int need = ceil_half(k);
  for (Vertex a = 0; a < sub.graph.order(); ++a) {
    for (Vertex b = a + 1; b < sub.graph.order(); ++b) {
      auto path = find_long_path_between(sub.graph, a, b, need, limits);
      if (!path) {
        result.failed = {sub.to_host(a), sub.to_host(b)};
        return result;
      }
      for (Vertex& v : path->vertices) v = sub.to_host(v);
      result.witnesses.push_back(std::move(*path));
    }
  }
  result.holds = true;
  return result;
}

namespace {

// Shortest a..b path whose internal vertices all lie in `component`.
// BFS with ascending neighbor order; ties resolve to the first-enqueued
// vertex, so the witness is deterministic.
Path absorption_witness(const Graph& g, const std::vector<char>& in_component,
                        Vertex a, Vertex b) {
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> queue;
  for (Vertex w : g.neighbors(a)) {
    if (in_component[static_cast<std::size_t>(w)]) {
      seen[static_cast<std::size_t>(w)] = 1;
      parent[static_cast<std::size_t>(w)] = a;
      queue.push_back(w);
    }
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Vertex u = queue[qi];
    if (g.adjacent(u, b)) {
      std::vector<Vertex> chain;
      for (Vertex c = u; c != a; c = parent[static_cast<std::size_t>(c)]) chain.push_back(c);
      Path path;
      path.vertices.push_back(a);
      path.vertices.insert(path.vertices.end(), chain.rbegin(), chain.rend());
      path.vertices.push_back(b);
      return path;
    }
    for (Vertex w : g.neighbors(u)) {
      if (!in_component[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)])
        continue;
      seen[static_cast<std::size_t>(w)] = 1;
      parent[static_cast<std::size_t>(w)] = u;
      queue.push_back(w);
    }
  }
  throw InternalError("absorption witness path vanished");
}

void absorb_to_fixpoint(const Graph& g, VertexSet& h) {
  while (auto step = absorbable_component(g, h)) {
    VertexSet absorbed = step->witness.vertices;
    std::sort(absorbed.begin(), absorbed.end());
    h = set_union(h, absorbed);
  }
}

Vertex smallest(const VertexSet& s) { return s.empty() ? -1 : s.front(); }

}  // namespace

std::optional<Absorption> absorbable_component(const Graph& g, const VertexSet& x) {
  require_vertex_set(g, x, "absorbable_component");
  std::vector<char> in_x(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : x) in_x[static_cast<std::size_t>(v)] = 1;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<char> in_component(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> queue;
  for (Vertex start = 0; start < g.order(); ++start) {
    if (in_x[static_cast<std::size_t>(start)] || seen[static_cast<std::size_t>(start)])
      continue;
    VertexSet component;
    queue.clear();
    queue.push_back(start);
    seen[static_cast<std::size_t>(start)] = 1;
    while (!queue.empty()) {
      Vertex u = queue.back();
      queue.pop_back();
      component.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (in_x[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
    std::sort(component.begin(), component.end());
    VertexSet attachments;
    for (Vertex u : component)
      for (Vertex w : g.neighbors(u))
        if (in_x[static_cast<std::size_t>(w)]) attachments.push_back(w);
    std::sort(attachments.begin(), attachments.end());
    attachments.erase(std::unique(attachments.begin(), attachments.end()),
                      attachments.end());
    if (attachments.size() >= 2) {
      for (Vertex u : component) in_component[static_cast<std::size_t>(u)] = 1;
      Absorption found;
      found.attach_a = attachments[0];
      found.attach_b = attachments[1];
      found.witness = absorption_witness(g, in_component, found.attach_a, found.attach_b);
      found.component = std::move(component);
      return found;
    }
  }
  return std::nullopt;
}

ClosureSet close_under_paths(const Graph& g, const Cycle& seed, int k) {
  std::string why;
  if (!cycle_valid_in(g, seed, &why))
    throw InvalidInput("close_under_paths: invalid seed cycle: " + why);
  if (seed.length() < k)
    throw InvalidInput("close_under_paths: seed cycle shorter than k");
  ClosureSet cs;
  cs.seed = seed;
  cs.vertices = seed.vertices;
  std::sort(cs.vertices.begin(), cs.vertices.end());
  absorb_to_fixpoint(g, cs.vertices);
  return cs;
}

ClosureFamily merge_family(const Graph& g, const ClosureFamily& family,
                           const ClosureSet& fresh) {
  // Every set passes through the worklist and is re-absorbed to fixpoint;
  // whatever it then intersects gets folded in and the union requeued.
  std::vector<ClosureSet> todo = family.members;
  todo.push_back(fresh);
  std::vector<ClosureSet> settled;
  int steps = 0;
  const int max_steps = 4 * (g.order() + static_cast<int>(todo.size()) + 2);
  while (!todo.empty()) {
    if (++steps > max_steps) throw InternalError("merge_family failed to stabilize");
    ClosureSet work = std::move(todo.back());
    todo.pop_back();
    absorb_to_fixpoint(g, work.vertices);
    bool overlapped = false;
    for (auto it = settled.begin(); it != settled.end();) {
      if (sets_intersect(it->vertices, work.vertices)) {
        if (smallest(it->vertices) <= smallest(work.vertices)) work.seed = it->seed;
        work.vertices = set_union(work.vertices, it->vertices);
        it = settled.erase(it);
        overlapped = true;
      } else {
        ++it;
      }
    }
    if (overlapped) {
      todo.push_back(std::move(work));
      continue;
    }
    settled.push_back(std::move(work));
  }
  std::sort(settled.begin(), settled.end(), [](const ClosureSet& a, const ClosureSet& b) {
    return smallest(a.vertices) < smallest(b.vertices);
  });
  ClosureFamily merged;
  merged.k = family.k;
  merged.members = std::move(settled);
  std::string why;
  if (!family_invariants_ok(g, merged, &why))
    throw InternalError("merge_family produced an invalid family: " + why);
  return merged;
}

bool closure_fixpoint_ok(const Graph& g, const ClosureSet& cs) {
  return !absorbable_component(g, cs.vertices).has_value();
}

bool closure_set_ok(const Graph& g, const ClosureSet& cs, int k, std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  require_vertex_set(g, cs.vertices, "closure_set_ok");
  std::string why;
  if (!cycle_valid_in(g, cs.seed, &why)) return fail("seed: " + why);
  if (cs.seed.length() < k) return fail("seed shorter than k");
  VertexSet seed_set = cs.seed.vertices;
  std::sort(seed_set.begin(), seed_set.end());
  if (!is_subset(seed_set, cs.vertices)) return fail("seed not contained in closure");
  if (static_cast<int>(cs.vertices.size()) < cs.seed.length())
    return fail("closure smaller than its seed");
  if (connected_components(induced_subgraph(g, cs.vertices).graph).size() != 1)
    return fail("induced subgraph not connected");
  if (!closure_fixpoint_ok(g, cs)) return fail("fixpoint condition violated");
  return true;
}

bool family_invariants_ok(const Graph& g, const ClosureFamily& family,
                          std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  const auto& members = family.members;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (sets_intersect(members[i].vertices, members[j].vertices))
        return fail("members " + std::to_string(i) + " and " + std::to_string(j) +
                    " intersect");
      if (crossing_edges(g, members[i].vertices, members[j].vertices).size() > 1)
        return fail("members " + std::to_string(i) + " and " + std::to_string(j) +
                    " joined by more than one edge");
    }
  }
  std::vector<char> in_member(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::fill(in_member.begin(), in_member.end(), 0);
    for (Vertex v : members[i].vertices) in_member[static_cast<std::size_t>(v)] = 1;
    for (Vertex z = 0; z < g.order(); ++z) {
      if (in_member[static_cast<std::size_t>(z)]) continue;
      int inside = 0;
      for (Vertex w : g.neighbors(z))
        if (in_member[static_cast<std::size_t>(w)]) ++inside;
      if (inside >= 2)
        return fail("vertex " + std::to_string(z) + " has " + std::to_string(inside) +
                    " neighbours inside member " + std::to_string(i));
    }
  }
  return true;
}

}  // namespace keyring
