#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "cbgraph/cover.hpp"
#include "cbgraph/generators.hpp"
#include "doctest.h"

using namespace cbg;

TEST_CASE("triangle-pentagon complexes of named graphs") {
  TwoComplex pc = build_complex(make_petersen().graph);
  CHECK(pc.triangles.empty());
  CHECK(pc.pentagons.size() == 12);

  TwoComplex kc = build_complex(make_clique(4).graph);
  CHECK(kc.triangles.size() == 4);
  CHECK(kc.pentagons.empty());
}

TEST_CASE("first homology over GF(2)") {
  CHECK(h1_rank_gf2(build_complex(make_petersen().graph)) == 0);
  CHECK(h1_rank_gf2(build_complex(make_clique(4).graph)) == 0);
  CHECK(h1_rank_gf2(build_complex(make_cycle(13).graph)) == 1);
  CHECK(h1_rank_gf2(build_complex(make_cycle(4).graph)) == 1);
  CHECK(h1_rank_gf2(build_complex(make_path(5).graph)) == 0);
}

TEST_CASE("cycle contraction") {
  Graph p = make_petersen().graph;
  DistanceOracle dp(p);
  auto r = contract_cycle(p, dp, {0, 1, 2, 3, 4}, 0);
  CHECK(r.kind == ContractionResult::CONSTANT);

  Graph c13 = make_cycle(13).graph;
  DistanceOracle d13(c13);
  std::vector<Vertex> ring(13);
  for (int i = 0; i < 13; ++i) ring[i] = i;
  auto rs = contract_cycle(c13, d13, ring, 0);
  CHECK(rs.kind == ContractionResult::STUCK);
  CHECK_FALSE(rs.stuck_cycle.empty());
}

TEST_CASE("the Petersen graph is its own radius-3 cover") {
  Graph p = make_petersen().graph;
  CoverState st = build_universal_cover(p, 0, 3);
  REQUIRE(st.cover.n() == 10);
  CHECK(st.cover.m() == 15);
  std::vector<char> hit(10, 0);
  for (Vertex v = 0; v < 10; ++v) {
    CHECK_FALSE(hit[st.image[v]]);
    hit[st.image[v]] = 1;
  }
  for (Vertex a = 0; a < 10; ++a)
    for (Vertex b = a + 1; b < 10; ++b)
      CHECK(st.cover.adjacent(a, b) == p.adjacent(st.image[a], st.image[b]));
  CHECK(verify_cover_invariants(p, st).all());
}

TEST_CASE("the 13-cycle unrolls into a path") {
  Graph g = make_cycle(13).graph;
  CoverState st = build_universal_cover(g, 0, 6);
  CHECK(st.cover.n() == 13);
  CHECK(st.cover.m() == 12);
  int leaves = 0;
  for (Vertex v = 0; v < st.cover.n(); ++v) {
    CHECK(st.cover.degree(v) <= 2);
    leaves += st.cover.degree(v) == 1;
  }
  CHECK(leaves == 2);
  CoverInvariantReport rep = verify_cover_invariants(g, st);
  CHECK(rep.all());
  CHECK(cover_is_cb_up_to(st, 3).verdict);
  CHECK_THROWS_AS(cover_is_cb_up_to(st, 4), Error);  // margin too small
}

TEST_CASE("construction validates the base graph") {
  // Balls of the 4-cycle are not convex, so the cover refuses to start.
  CHECK_THROWS_AS(build_universal_cover(make_cycle(4).graph, 0, 2), Error);
}

TEST_CASE("height map matches distances from the cover base") {
  Graph g = make_pentagon_chain(3).graph;
  DistanceOracle d(g);
  CoverState st = build_universal_cover(g, 0, d.diameter());
  DistanceOracle dc(st.cover);
  for (Vertex v = 0; v < st.cover.n(); ++v)
    CHECK(st.height[v] == dc.dist(st.base, v));
}
