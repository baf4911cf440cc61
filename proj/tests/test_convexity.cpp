#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "cbgraph/convexity.hpp"
#include "cbgraph/generators.hpp"
#include "doctest.h"

using namespace cbg;

TEST_CASE("convex and non-convex subsets of a 6-cycle") {
  Graph g = make_cycle(6).graph;
  DistanceOracle d(g);
  CHECK(is_convex(d, VertexSet::of(6, {0, 1, 2})).verdict);
  ConvexityWitness w = is_convex(d, VertexSet::of(6, {0, 2}));
  CHECK_FALSE(w.verdict);
  CHECK(w.x == 0);
  CHECK(w.y == 2);
  CHECK(w.z == 1);
}

TEST_CASE("unit ball of a 4-cycle is not convex") {
  Graph g = make_cycle(4).graph;
  DistanceOracle d(g);
  ConvexityWitness w = has_convex_balls(g, d);
  CHECK_FALSE(w.verdict);
  CHECK(w.center == 0);
  CHECK(w.radius == 1);
  CHECK(w.x == 1);
  CHECK(w.y == 3);
  CHECK(w.z == 2);
}

TEST_CASE("pentagon and Petersen have convex balls") {
  for (const Graph& g :
       {make_cycle(5).graph, make_petersen().graph, make_ctreex().graph}) {
    DistanceOracle d(g);
    CHECK(has_convex_balls(g, d).verdict);
    // The 3-convex check agrees with the unrestricted definition.
    CHECK(has_convex_balls(g, d, true).verdict);
  }
}

TEST_CASE("a 7-cycle has 2-convex but not 3-convex balls") {
  Graph g = make_cycle(7).graph;
  DistanceOracle d(g);
  CHECK(has_k_convex_balls(g, d, 2).verdict);
  CHECK_FALSE(has_k_convex_balls(g, d, 3).verdict);
  CHECK_FALSE(has_convex_balls(g, d).verdict);
}

TEST_CASE("k-convexity requires k >= 2") {
  Graph g = make_cycle(5).graph;
  DistanceOracle d(g);
  CHECK_THROWS_AS(is_k_convex(d, VertexSet::of(5, {0, 1}), 1), Error);
}

TEST_CASE("hulls preserve diameter on graphs with convex balls") {
  Graph g = make_petersen().graph;
  DistanceOracle d(g);
  HullDiameterReport r = hull_preserves_diameter(g, d, 50, 7);
  CHECK(r.preserved);

  // Pairs alone never fail in the 6-cycle, but the sampled larger sets find
  // {0,2,4}: its hull is the whole cycle, diameter 3 against 2.
  Graph c6 = make_cycle(6).graph;
  DistanceOracle d6(c6);
  CHECK(hull_preserves_diameter(c6, d6, 0, 7).preserved);
  HullDiameterReport r6 = hull_preserves_diameter(c6, d6, 200, 7);
  CHECK_FALSE(r6.preserved);
  CHECK(r6.hull_diam > r6.set_diam);
}
