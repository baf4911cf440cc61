#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "cbgraph/dismantle.hpp"
#include "cbgraph/generators.hpp"
#include "doctest.h"

using namespace cbg;

TEST_CASE("bfs orders are valid and seed-sensitive") {
  Graph g = make_petersen().graph;
  BfsOrder a = bfs_order(g, 0);
  CHECK(a.order[0] == 0);
  CHECK(a.parent[0] == 0);
  CHECK(is_valid_bfs_order(g, a));
  // Seed 0 scans neighbors in ascending id order.
  CHECK(a.order[1] == 1);

  BfsOrder b = bfs_order(g, 0, 42);
  CHECK(is_valid_bfs_order(g, b));

  // Tampering with the parent map invalidates the order.
  BfsOrder bad = a;
  bad.parent[a.order[9]] = a.order[9];
  CHECK_FALSE(is_valid_bfs_order(g, bad));
}

TEST_CASE("bfs orders dismantle powers of convex-ball graphs") {
  for (const Graph& g : {make_petersen().graph, make_pentagon_chain(3).graph,
                         make_diameter3().graph, make_cycle(5).graph}) {
    for (Vertex base = 0; base < g.n(); ++base) {
      BfsOrder o = bfs_order(g, base);
      for (int p = 2; p <= 4; ++p)
        CHECK_FALSE(verify_dismantling(g, o.order, p));
    }
  }
}

TEST_CASE("dismantling verification reports the first violator") {
  Graph c4 = make_cycle(4).graph;
  BfsOrder o = bfs_order(c4, 0);
  CHECK(o.order == std::vector<Vertex>{0, 1, 3, 2});
  auto bad = verify_dismantling(c4, o.order, 1);
  REQUIRE(bad.has_value());
  CHECK(*bad == 2);
  // The square of the 4-cycle is complete, hence dismantlable.
  CHECK_FALSE(verify_dismantling(c4, o.order, 2));
}

TEST_CASE("iterated domination cores") {
  // A path collapses to a single vertex.
  CHECK(compute_core(make_path(4).graph) == VertexSet::of(4, {3}));
  // The Petersen graph has no dominated vertex at all.
  CHECK(compute_core(make_petersen().graph) == VertexSet::full(10));
  // The pentagon is its own core.
  CHECK(compute_core(make_cycle(5).graph).size() == 5);
  // A clique collapses.
  CHECK(compute_core(make_clique(5).graph).size() == 1);
}

TEST_CASE("automorphisms and orbits") {
  Graph c6 = make_cycle(6).graph;
  Automorphism rot2 = {2, 3, 4, 5, 0, 1};
  CHECK(is_automorphism(c6, rot2));
  auto orbs = orbits(rot2);
  REQUIRE(orbs.size() == 2);
  CHECK(orbs[0] == std::vector<Vertex>{0, 2, 4});
  CHECK(orbs[1] == std::vector<Vertex>{1, 3, 5});

  Automorphism not_auto = {1, 0, 2, 3, 4, 5};  // breaks edges 1-2 vs 0-2
  CHECK_FALSE(is_automorphism(c6, not_auto));
}

TEST_CASE("stabilized convex sets") {
  // Rotation of the circulant: no fixed vertex, clique, or pentagon, but the
  // whole graph is convex of diameter 2.
  Graph g = make_circulant(9, {1, 2}).graph;
  DistanceOracle d(g);
  Automorphism f(9);
  for (Vertex v = 0; v < 9; ++v) f[v] = (v + 1) % 9;
  VertexSet s = stabilized_convex_set(g, d, f);
  CHECK(s == VertexSet::full(9));

  // Under the identity the singleton {0} is already stabilized and convex.
  Graph p = make_petersen().graph;
  DistanceOracle dp(p);
  Automorphism id(10);
  for (Vertex v = 0; v < 10; ++v) id[v] = v;
  CHECK(stabilized_convex_set(p, dp, id) == VertexSet::of(10, {0}));

  Automorphism junk(10, 0);
  CHECK_THROWS_AS(stabilized_convex_set(p, dp, junk), Error);
}
