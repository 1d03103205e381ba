#include "keyring/cycle_search.hpp"

#include <algorithm>

namespace keyring {

bool Cycle::contains(Vertex u) const {
  return std::find(vertices.begin(), vertices.end(), u) != vertices.end();
}

bool cycle_valid_in(const Graph& g, const Cycle& c, std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  const auto& seq = c.vertices;
  if (seq.size() < 3) return fail("cycle has fewer than 3 vertices");
  for (Vertex u : seq)
    if (!g.has_vertex(u)) return fail("cycle vertex " + std::to_string(u) + " out of range");
  std::vector<Vertex> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return fail("cycle repeats a vertex");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    Vertex u = seq[i];
    Vertex v = seq[(i + 1) % seq.size()];
    if (!g.adjacent(u, v))
      return fail("cycle step " + std::to_string(u) + "-" + std::to_string(v) +
                  " is not an edge");
  }
  return true;
}

bool path_valid_in(const Graph& g, const Path& p, std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  const auto& seq = p.vertices;
  if (seq.empty()) return fail("path is empty");
  for (Vertex u : seq)
    if (!g.has_vertex(u)) return fail("path vertex " + std::to_string(u) + " out of range");
  std::vector<Vertex> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return fail("path repeats a vertex");
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (!g.adjacent(seq[i], seq[i + 1]))
      return fail("path step " + std::to_string(seq[i]) + "-" +
                  std::to_string(seq[i + 1]) + " is not an edge");
  }
  return true;
}

namespace {

// Shared DFS state. Pruning uses one reusable BFS scratch buffer; `stamp`
// versions the visited marks so the buffer never needs clearing.
struct Searcher {
  const Graph& g;
  std::uint64_t budget;
  std::uint64_t used = 0;
  std::vector<char> on_path;
  std::vector<Vertex> path;
  std::vector<char> target_adj;  // adjacency bitmap of the close target
  std::vector<int> mark;
  int stamp = 0;
  std::vector<Vertex> queue;

  Searcher(const Graph& graph, const SearchLimits& limits)
      : g(graph),
        budget(limits.max_expansions),
        on_path(static_cast<std::size_t>(graph.order()), 0),
        target_adj(static_cast<std::size_t>(graph.order()), 0),
        mark(static_cast<std::size_t>(graph.order()), 0) {}

  void tick() {
    if (++used > budget)
      throw BudgetExceeded("search budget exceeded after " + std::to_string(budget) +
                           " node expansions");
  }

  void set_target(Vertex t) {
    std::fill(target_adj.begin(), target_adj.end(), 0);
    for (Vertex w : g.neighbors(t)) target_adj[static_cast<std::size_t>(w)] = 1;
  }

  // BFS from the path endpoint over vertices that may still extend the path:
  // not on the path, not `avoid`, and (when floor >= 0) greater than floor.
  // Returns the count of such vertices and whether any of them can reach the
  // close target directly.
  std::pair<int, bool> extension_scan(Vertex avoid, Vertex floor) {
    Vertex endpoint = path.back();
    ++stamp;
    queue.clear();
    mark[static_cast<std::size_t>(endpoint)] = stamp;
    queue.push_back(endpoint);
    int fresh = 0;
    bool closable = false;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      for (Vertex w : g.neighbors(queue[qi])) {
        if (w == avoid || on_path[static_cast<std::size_t>(w)]) continue;
        if (floor >= 0 && w < floor) continue;
        if (mark[static_cast<std::size_t>(w)] == stamp) continue;
        mark[static_cast<std::size_t>(w)] = stamp;
        queue.push_back(w);
        ++fresh;
        if (target_adj[static_cast<std::size_t>(w)]) closable = true;
      }
    }
    return {fresh, closable};
  }
};

// Cycle DFS rooted at `root`. When `floor` is nonnegative all other cycle
// vertices must be > floor (used to root each cycle at its smallest vertex).
bool extend_cycle(Searcher& s, Vertex root, int min_len, Vertex floor) {
  s.tick();
  Vertex current = s.path.back();
  if (static_cast<int>(s.path.size()) >= std::max(3, min_len) &&
      s.target_adj[static_cast<std::size_t>(current)])
    return true;
  auto [fresh, closable] = s.extension_scan(root, floor);
  if (!closable) return false;
  if (static_cast<int>(s.path.size()) + fresh < min_len) return false;
  for (Vertex w : s.g.neighbors(current)) {
    if (w == root || s.on_path[static_cast<std::size_t>(w)]) continue;
    if (floor >= 0 && w < floor) continue;
    s.on_path[static_cast<std::size_t>(w)] = 1;
    s.path.push_back(w);
    if (extend_cycle(s, root, min_len, floor)) return true;
    s.path.pop_back();
    s.on_path[static_cast<std::size_t>(w)] = 0;
  }
  return false;
}

std::optional<Cycle> cycle_search_from(Searcher& s, Vertex root, int min_len, Vertex floor) {
  if (s.g.degree(root) < 2) return std::nullopt;
  s.set_target(root);
  s.path.assign(1, root);
  s.on_path.assign(s.on_path.size(), 0);
  s.on_path[static_cast<std::size_t>(root)] = 1;
  if (extend_cycle(s, root, min_len, floor)) return Cycle{s.path};
  return std::nullopt;
}

bool extend_path(Searcher& s, Vertex target, int min_len) {
  s.tick();
  Vertex current = s.path.back();
  if (static_cast<int>(s.path.size()) >= min_len &&
      s.target_adj[static_cast<std::size_t>(current)]) {
    s.path.push_back(target);
    return true;
  }
  auto [fresh, closable] = s.extension_scan(target, -1);
  if (!closable) return false;
  if (static_cast<int>(s.path.size()) + fresh < min_len) return false;
  for (Vertex w : s.g.neighbors(current)) {
    if (w == target || s.on_path[static_cast<std::size_t>(w)]) continue;
    s.on_path[static_cast<std::size_t>(w)] = 1;
    s.path.push_back(w);
    if (extend_path(s, target, min_len)) return true;
    s.path.pop_back();
    s.on_path[static_cast<std::size_t>(w)] = 0;
  }
  return false;
}

bool enumerate_dfs(Searcher& s, Vertex root, const std::function<bool(const Cycle&)>& fn) {
  s.tick();
  Vertex current = s.path.back();
  if (s.path.size() >= 3 && s.target_adj[static_cast<std::size_t>(current)] &&
      s.path[1] < current) {
    if (!fn(Cycle{s.path})) return false;
  }
  for (Vertex w : s.g.neighbors(current)) {
    if (w == root || s.on_path[static_cast<std::size_t>(w)]) continue;
    s.on_path[static_cast<std::size_t>(w)] = 1;
    s.path.push_back(w);
    bool keep_going = enumerate_dfs(s, root, fn);
    s.path.pop_back();
    s.on_path[static_cast<std::size_t>(w)] = 0;
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

std::optional<Cycle> find_long_cycle(const Graph& g, int min_length,
                                     const SearchLimits& limits) {
  if (min_length < 3) throw InvalidInput("find_long_cycle: min length must be >= 3");
  Searcher s(g, limits);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (auto found = cycle_search_from(s, root, min_length, root)) return found;
  }
  return std::nullopt;
}

std::optional<Cycle> find_cycle_through(const Graph& g, Vertex u, int min_length,
                                        const SearchLimits& limits) {
  if (min_length < 3) throw InvalidInput("find_cycle_through: min length must be >= 3");
  if (!g.has_vertex(u))
    throw InvalidInput("find_cycle_through: vertex " + std::to_string(u) + " out of range");
  Searcher s(g, limits);
  return cycle_search_from(s, u, min_length, -1);
}

std::optional<Path> find_long_path_between(const Graph& g, Vertex u, Vertex v,
                                           int min_length, const SearchLimits& limits) {
  if (!g.has_vertex(u) || !g.has_vertex(v))
    throw InvalidInput("find_long_path_between: endpoint out of range");
  if (u == v) throw InvalidInput("find_long_path_between: endpoints must differ");
  Searcher s(g, limits);
  s.set_target(v);
  s.path.assign(1, u);
  s.on_path[static_cast<std::size_t>(u)] = 1;
  if (extend_path(s, v, std::max(min_length, 1))) return Path{s.path};
  return std::nullopt;
}

void for_each_cycle_through(const Graph& g, Vertex u,
                            const std::function<bool(const Cycle&)>& fn,
                            const SearchLimits& limits) {
  if (!g.has_vertex(u))
    throw InvalidInput("for_each_cycle_through: vertex " + std::to_string(u) +
                       " out of range");
  if (g.degree(u) < 2) return;
  Searcher s(g, limits);
  s.set_target(u);
  s.path.assign(1, u);
  s.on_path[static_cast<std::size_t>(u)] = 1;
  enumerate_dfs(s, u, fn);
}

std::vector<Cycle> enumerate_cycles_through(const Graph& g, Vertex u,
                                            std::size_t max_results,
                                            const SearchLimits& limits) {
  std::vector<Cycle> out;
  if (max_results == 0) return out;
  for_each_cycle_through(
      g, u,
      [&](const Cycle& c) {
        out.push_back(c);
        return out.size() < max_results;
      },
      limits);
  return out;
}

}  // namespace keyring
