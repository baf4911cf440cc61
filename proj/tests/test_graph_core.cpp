#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>

#include "cbgraph/generators.hpp"
#include "cbgraph/graph.hpp"
#include "doctest.h"

using namespace cbg;

TEST_CASE("vertex set basics") {
  VertexSet s(70);
  CHECK(s.empty());
  s.add(0);
  s.add(69);
  CHECK(s.size() == 2);
  CHECK(s.contains(69));
  CHECK_FALSE(s.contains(1));
  VertexSet t = VertexSet::of(70, {0, 1});
  CHECK((s & t) == VertexSet::of(70, {0}));
  CHECK((s | t).size() == 3);
  CHECK((s - t) == VertexSet::of(70, {69}));
  CHECK(VertexSet::of(70, {0}).is_subset_of(t));
  CHECK(s.first() == 0);
  CHECK(VertexSet(5).first() == -1);
  CHECK(VertexSet::full(5).size() == 5);
  CHECK(VertexSet::of(5, {0, 2}).lex_less(VertexSet::of(5, {0, 3})));
}

TEST_CASE("graph construction rejects bad input") {
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), Error);
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), Error);
  Graph g(3, {{0, 1}, {1, 0}, {1, 2}});  // duplicate edge merged
  CHECK(g.m() == 2);
  CHECK(g.degree(1) == 2);
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("distance oracle on a 6-cycle") {
  Graph g = make_cycle(6).graph;
  DistanceOracle d(g);
  CHECK(d.diameter() == 3);
  CHECK(d.dist(0, 3) == 3);
  CHECK(d.eccentricity(2) == 3);
  // Two antipodal geodesics cover the whole cycle.
  CHECK(d.interval(0, 3) == VertexSet::full(6));
  CHECK(d.ball(0, 1) == VertexSet::of(6, {0, 1, 5}));
  CHECK(d.sphere(0, 2) == VertexSet::of(6, {2, 4}));
  CHECK(d.on_geodesic(0, 1, 2));
  CHECK_FALSE(d.on_geodesic(0, 5, 2));
  CHECK(d.set_diameter(VertexSet::of(6, {1, 5})) == 2);
  CHECK(d.convex_hull(VertexSet::of(6, {1, 5})) == VertexSet::of(6, {0, 1, 5}));
  CHECK(d.convex_hull(VertexSet(6)).empty());
  CHECK(d.ball_around_set(VertexSet::of(6, {0, 3}), 1) ==
        VertexSet::of(6, {0, 1, 2, 3, 4, 5}));
}

TEST_CASE("joint ball intersects member balls") {
  Graph g = make_cycle(5).graph;
  DistanceOracle d(g);
  CHECK(d.joint_ball(VertexSet::of(5, {0, 1}), 1) == VertexSet::of(5, {0, 1}));
  CHECK(d.joint_ball(VertexSet::of(5, {0}), 1) == VertexSet::of(5, {0, 1, 4}));
  CHECK_THROWS_AS(d.joint_ball(VertexSet(5), 1), Error);
}

TEST_CASE("disconnected graphs are rejected by the oracle") {
  Graph g(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(g.is_connected());
  CHECK_THROWS_AS((void)DistanceOracle(g), Error);
}

TEST_CASE("powers and isometric subgraphs") {
  Graph c6 = make_cycle(6).graph;
  Graph sq = power_graph(c6, 2);
  for (Vertex v = 0; v < 6; ++v) CHECK(sq.degree(v) == 4);
  CHECK(power_graph(c6, 3).m() == 15);  // complete
  CHECK_THROWS_AS(power_graph(c6, 0), Error);

  // A 5-cycle inside the Petersen graph is isometric; a 6-cycle is not.
  Graph p = make_petersen().graph;
  CHECK(is_isometric_subgraph(p, VertexSet::of(10, {0, 1, 2, 3, 4})));
  CHECK_FALSE(is_isometric_subgraph(p, VertexSet::of(10, {0, 1, 2, 3, 8, 5})));
}

TEST_CASE("induced subgraph keeps the back map") {
  Graph g = make_cycle(5).graph;
  std::vector<Vertex> back;
  Graph h = g.induced(VertexSet::of(5, {1, 2, 4}), &back);
  CHECK(h.n() == 3);
  CHECK(h.m() == 1);
  CHECK(back == std::vector<Vertex>{1, 2, 4});
}

TEST_CASE("edge list round trip with relabeling") {
  std::istringstream in("# comment\n0 7\n7 12\n99\n");
  LoadedGraph lg = load_edge_list(in);
  CHECK(lg.graph.n() == 4);
  CHECK(lg.graph.m() == 2);
  CHECK(lg.original_id == std::vector<long long>{0, 7, 12, 99});

  std::ostringstream out;
  write_edge_list(out, lg.graph);
  std::istringstream back(out.str());
  LoadedGraph lg2 = load_edge_list(back);
  CHECK(lg2.graph.n() == 4);
  CHECK(lg2.graph.m() == 2);
}
