#include "doctest.h"
#include "keyring/closure.hpp"
#include "keyring/generate.hpp"
#include "support/brute.hpp"

using namespace keyring;

namespace {

// C_6 plus an extra vertex 6 adjacent to 0 and 3.
Graph theta_graph() {
  return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {3, 6}});
}

Cycle c6_seed() { return Cycle{{0, 1, 2, 3, 4, 5}}; }

VertexSet range_set(Vertex lo, Vertex hi) {
  VertexSet out;
  for (Vertex v = lo; v < hi; ++v) out.push_back(v);
  return out;
}

}  // namespace

TEST_CASE("property (a) checks") {
  Graph c6 = make_cycle(6);
  auto on_cycle = check_property_a(c6, range_set(0, 6), 6);
  CHECK(on_cycle.holds);
  for (const auto& w : on_cycle.witnesses) {
    CHECK(cycle_valid_in(c6, w));
    CHECK(w.length() >= 3);
  }

  Graph with_pendant(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
  auto pendant = check_property_a(with_pendant, range_set(0, 4), 4);
  CHECK_FALSE(pendant.holds);
  CHECK(pendant.failed == 3);

  // Independent route: every K_4 vertex lies on a 4-cycle.
  Graph k4 = make_clique(4);
  for (Vertex u = 0; u < 4; ++u) {
    bool found = false;
    for (const auto& c : brute::all_cycles_through(k4, u))
      if (c.length() >= 4) found = true;
    CHECK(found);
  }
  CHECK(check_property_a(k4, range_set(0, 4), 8).holds);
}

TEST_CASE("property (b) checks") {
  CHECK(check_property_b(make_cycle(6), range_set(0, 6), 6).holds);

  auto tri = check_property_b(make_clique(3), range_set(0, 3), 6);
  CHECK_FALSE(tri.holds);
  CHECK(tri.failed == std::make_pair(0, 1));

  Graph k4 = make_clique(4);
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v) CHECK(brute::longest_path_between(k4, u, v) == 3);
  auto full = check_property_b(k4, range_set(0, 4), 6);
  CHECK(full.holds);
  for (const auto& p : full.witnesses) CHECK(p.length() >= 3);
}

TEST_CASE("absorbable_component") {
  auto hit = absorbable_component(theta_graph(), range_set(0, 6));
  REQUIRE(hit);
  CHECK(hit->component == VertexSet{6});
  CHECK(hit->attach_a == 0);
  CHECK(hit->attach_b == 3);
  CHECK(hit->witness.vertices == std::vector<Vertex>{0, 6, 3});

  Graph pendant(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}});
  CHECK_FALSE(absorbable_component(pendant, range_set(0, 6)));

  Graph eight = make_figure_eight(6, 6);
  CHECK_FALSE(absorbable_component(eight, range_set(0, 6)));
}

TEST_CASE("close_under_paths") {
  auto theta = close_under_paths(theta_graph(), c6_seed(), 6);
  CHECK(theta.vertices == range_set(0, 7));

  auto eight = close_under_paths(make_figure_eight(6, 6), c6_seed(), 6);
  CHECK(eight.vertices == range_set(0, 6));

  // Absorbing the first extra vertex exposes the second.
  Graph chained(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                    {0, 6}, {3, 6}, {6, 7}, {1, 7}});
  auto grown = close_under_paths(chained, c6_seed(), 6);
  CHECK(grown.vertices == range_set(0, 8));
  CHECK(closure_fixpoint_ok(chained, grown));

  CHECK_THROWS_AS(close_under_paths(make_cycle(5), Cycle{{0, 1, 2, 3, 4}}, 6),
                  InvalidInput);
  CHECK_THROWS_AS(close_under_paths(make_cycle(6), Cycle{{0, 1, 3}}, 3), InvalidInput);
}

TEST_CASE("merge_family") {
  Graph joined = make_cycles_joined_by_edge(6, 6);

  SUBCASE("disjoint members with one crossing edge stay separate") {
    ClosureFamily family{6, {close_under_paths(joined, c6_seed(), 6)}};
    auto fresh = close_under_paths(joined, Cycle{{6, 7, 8, 9, 10, 11}}, 6);
    auto merged = merge_family(joined, family, fresh);
    REQUIRE(merged.members.size() == 2);
    CHECK(merged.members[0].vertices == range_set(0, 6));
    CHECK(merged.members[1].vertices == range_set(6, 12));
    CHECK(family_invariants_ok(joined, merged));
  }

  SUBCASE("intersecting members collapse") {
    ClosureFamily family{6, {close_under_paths(joined, c6_seed(), 6)}};
    ClosureSet fresh;
    fresh.seed = c6_seed();
    fresh.vertices = VertexSet{0, 1, 2, 3, 4, 5};
    auto merged = merge_family(joined, family, fresh);
    CHECK(merged.members.size() == 1);
  }

  SUBCASE("two crossing edges force a merge") {
    EdgeList edges;
    for (Vertex i = 0; i < 6; ++i) edges.emplace_back(i, (i + 1) % 6);
    for (Vertex i = 0; i < 6; ++i) edges.emplace_back(6 + i, 6 + (i + 1) % 6);
    edges.emplace_back(0, 6);
    edges.emplace_back(3, 9);
    Graph two_bridges(12, edges);

    ClosureSet first;
    first.seed = c6_seed();
    first.vertices = range_set(0, 6);
    ClosureSet second;
    second.seed = Cycle{{6, 7, 8, 9, 10, 11}};
    second.vertices = range_set(6, 12);

    auto merged = merge_family(two_bridges, ClosureFamily{6, {first}}, second);
    REQUIRE(merged.members.size() == 1);
    CHECK(merged.members[0].vertices == range_set(0, 12));
    CHECK(family_invariants_ok(two_bridges, merged));
  }
}

TEST_CASE("closures preserve membership properties on random hosts") {
  int audited = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Graph g = brute::random_graph(9, 55, seed);
    auto seed_cycle = find_long_cycle(g, 6);
    if (!seed_cycle) continue;
    auto cs = close_under_paths(g, *seed_cycle, 6);
    ++audited;
    CHECK(closure_fixpoint_ok(g, cs));
    std::string why;
    CHECK_MESSAGE(closure_set_ok(g, cs, 6, &why), why);
    VertexSet seed_set = seed_cycle->vertices;
    std::sort(seed_set.begin(), seed_set.end());
    CHECK(is_subset(seed_set, cs.vertices));
    CHECK(cs.vertices.size() >= seed_set.size());
    CHECK(check_property_a(g, cs.vertices, 6).holds);
    CHECK(check_property_b(g, cs.vertices, 6).holds);
  }
  CHECK(audited >= 10);
}
