#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "cbgraph/combing.hpp"
#include "cbgraph/generators.hpp"
#include "doctest.h"

using namespace cbg;

namespace {

// Two stacked clique levels between u and v, as in the worked example:
// level sizes 1,3,1,2,1 between the far corners.
Graph layered_example() {
  // 0=u; 1,2,3 first layer; 4,5,6 second (middle 5); 7,8 third; 9=v.
  return Graph(10, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {1, 3},
                    {1, 4}, {2, 5}, {1, 5}, {3, 5}, {3, 6}, {4, 5}, {5, 6},
                    {4, 7}, {5, 7}, {5, 8}, {6, 8}, {7, 8}, {7, 9}, {8, 9}});
}

}  // namespace

TEST_CASE("clique path on the pentagon") {
  Graph c5 = make_cycle(5).graph;
  DistanceOracle d(c5);
  CliquePath p = clique_path(c5, d, 0, 2);
  REQUIRE(p.length() == 2);
  CHECK(p.cliques[0] == VertexSet::of(5, {0}));
  CHECK(p.cliques[1] == VertexSet::of(5, {1}));
  CHECK(p.cliques[2] == VertexSet::of(5, {2}));
  CHECK(is_normal(c5, d, p).all());
  // Extension convention beyond the sink.
  CHECK(p.level(7) == p.cliques[2]);
}

TEST_CASE("clique path levels on the layered example") {
  Graph g = layered_example();
  DistanceOracle d(g);
  CliquePath p = clique_path(g, d, 0, 9);
  REQUIRE(p.length() == 4);
  CHECK(p.cliques[0].size() == 1);
  CHECK(p.cliques[1].size() == 3);
  CHECK(p.cliques[2].size() == 1);
  CHECK(p.cliques[3].size() == 2);
  CHECK(p.cliques[4].size() == 1);
  CHECK(p.cliques[2] == VertexSet::of(10, {5}));
  CHECK(is_normal(g, d, p).all());
  auto all = enumerate_normal_paths(g, d, 0, 9);
  REQUIRE(all.size() == 1);
  CHECK(all[0].cliques == p.cliques);
}

TEST_CASE("normality fails and no normal path exists in the 4-cycle") {
  Graph c4 = make_cycle(4).graph;
  DistanceOracle d(c4);
  CliquePath p = clique_path(c4, d, 0, 2);
  NormalAxiomReport rep = is_normal(c4, d, p);
  CHECK_FALSE(rep.all());
  CHECK(rep.failing_axiom == 0);  // {1,3} is not a clique
  CHECK(enumerate_normal_paths(c4, d, 0, 2).empty());
}

TEST_CASE("descending to an edge sink can empty a level") {
  Graph c5 = make_cycle(5).graph;
  DistanceOracle d(c5);
  CHECK_FALSE(clique_path_to_set(c5, d, 0, VertexSet::of(5, {2, 3})));
  CHECK_THROWS_AS(clique_path_to_set(c5, d, 0, VertexSet::of(5, {1, 2})),
                  Error);  // not equidistant
  auto ok = clique_path_to_set(c5, d, 0, VertexSet::of(5, {2}));
  REQUIRE(ok.has_value());
  CHECK(ok->length() == 2);
}

TEST_CASE("normal vertex paths are geodesics through the levels") {
  Graph p = make_petersen().graph;
  DistanceOracle d(p);
  for (unsigned long long seed : {0ull, 11ull, 99ull}) {
    auto path = normal_vertex_path(p, d, 0, 7, seed);
    REQUIRE((int)path.size() == d.dist(0, 7) + 1);
    CHECK(path.front() == 0);
    CHECK(path.back() == 7);
    for (size_t i = 0; i + 1 < path.size(); ++i)
      CHECK(p.adjacent(path[i], path[i + 1]));
  }
}

TEST_CASE("fellow traveler bounds on the Petersen graph") {
  Graph g = make_petersen().graph;
  DistanceOracle d(g);
  auto st_all = fellow_traveler_scan(g, d, all_quadruples(g));
  CHECK(st_all.max_ratio <= 7.0);
  auto st_sinks = fellow_traveler_scan(g, d, same_source_adjacent_sinks(g));
  CHECK(st_sinks.max_level_distance == 2);
  auto st_far = fellow_traveler_scan(g, d, adjacent_sources_same_sink(g, d, true));
  CHECK(st_far.max_level_distance == 1);
  auto st_eq = fellow_traveler_scan(g, d, adjacent_sources_same_sink(g, d, false));
  CHECK(st_eq.max_level_distance == 2);
}

TEST_CASE("shortening non-geodesic paths") {
  Graph g = make_petersen().graph;
  DistanceOracle d(g);
  std::vector<Vertex> walk = {0, 1, 2, 3, 4};  // around the outer pentagon
  REQUIRE(d.dist(0, 4) == 1);
  auto s = fftp_shorten(g, d, walk);
  CHECK(s.front() == 0);
  CHECK(s.back() == 4);
  CHECK(s.size() < walk.size());
  for (size_t i = 0; i + 1 < s.size(); ++i) CHECK(g.adjacent(s[i], s[i + 1]));
  CHECK(async_fellow_K(d, s, walk) <= 2);

  CHECK_THROWS_AS(fftp_shorten(g, d, {0, 1, 2}), Error);  // already geodesic
}

TEST_CASE("asynchronous fellow distance") {
  Graph g = make_cycle(6).graph;
  DistanceOracle d(g);
  std::vector<Vertex> a = {0, 1, 2, 3}, b = {0, 5, 4, 3};
  CHECK(async_fellow_K(d, a, a) == 0);
  CHECK(async_fellow_K(d, a, b) == 2);  // antipodal midpoints
}

TEST_CASE("almost convexity constant of the 8-cycle") {
  Graph g = make_cycle(8).graph;
  DistanceOracle d(g);
  // x,y at distance 2 on the sphere of radius 3 connect only the long way.
  CHECK(almost_convexity_constant(g, d, 2) == 6);

  Graph p = make_petersen().graph;
  DistanceOracle dp(p);
  CHECK(almost_convexity_constant(p, dp, 2) <= 4);
}
