#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "cbgraph/conditions.hpp"
#include "cbgraph/generators.hpp"
#include "doctest.h"

using namespace cbg;

TEST_CASE("named graphs have their defining shapes") {
  NamedGraph p = make_petersen();
  CHECK(p.graph.n() == 10);
  CHECK(p.graph.m() == 15);
  for (Vertex v = 0; v < 10; ++v) CHECK(p.graph.degree(v) == 3);

  NamedGraph hs = make_hoffman_singleton();
  CHECK(hs.graph.n() == 50);
  CHECK(hs.graph.m() == 175);
  for (Vertex v = 0; v < 50; ++v) CHECK(hs.graph.degree(v) == 7);

  CHECK(make_pt().graph.n() == 6);
  CHECK(make_pp1().graph.n() == 8);
  CHECK(make_pp2().graph.n() == 7);
  CHECK(make_ctreex().graph.n() == 10);
  CHECK(make_diameter3().graph.n() == 10);
  CHECK(DistanceOracle(make_diameter3().graph).diameter() == 3);

  NamedGraph circ = make_circulant(9, {1, 2});
  CHECK(circ.graph.n() == 9);
  for (Vertex v = 0; v < 9; ++v) CHECK(circ.graph.degree(v) == 4);
}

TEST_CASE("labeled vertices carry their stated relations") {
  NamedGraph ct = make_ctreex();
  DistanceOracle d(ct.graph);
  CHECK(d.dist(ct.labels.at("v"), ct.labels.at("x")) == 3);
  CHECK(d.dist(ct.labels.at("v"), ct.labels.at("y")) == 3);
  CHECK(ct.graph.adjacent(ct.labels.at("x"), ct.labels.at("y")));

  NamedGraph gk = make_gk(3);
  CHECK(gk.labels.count("u"));
  CHECK(gk.labels.count("v"));
  CHECK(gk.labels.count("x"));
  CHECK(gk.labels.count("y"));
}

TEST_CASE("pentagon chains are convex-ball graphs of all sampled lengths") {
  int prev_n = 0;
  for (int s = 2; s <= 5; ++s) {
    Graph g = make_pentagon_chain(s).graph;
    CHECK(g.n() > prev_n);
    prev_n = g.n();
    CHECK(recognize_cb(g, RecognizeMethod::DIRECT).verdict);
  }
  CHECK_THROWS_AS(make_pentagon_chain(1), Error);
}

TEST_CASE("family dispatch") {
  CHECK(make_family("petersen", {}).graph.n() == 10);
  CHECK(make_family("cycle", {8}).graph.n() == 8);
  CHECK(make_family("circulant", {9, 1, 2}).graph.m() == 18);
  CHECK(make_family("c5", {}).graph.n() == 5);
  CHECK_THROWS_AS(make_family("nope", {}), Error);
  CHECK_THROWS_AS(make_family("cycle", {}), Error);  // missing parameter
}

TEST_CASE("wedge glues at a single vertex") {
  Graph w = wedge(make_cycle(5).graph, 2, make_cycle(5).graph, 0);
  CHECK(w.n() == 9);
  CHECK(w.m() == 10);
  CHECK(w.is_connected());
}

TEST_CASE("exhaustive small catalog has the known counts") {
  const int expected[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    auto gs = all_connected_graphs(n);
    CHECK((int)gs.size() == expected[n]);
    for (const Graph& g : gs) {
      CHECK(g.n() == n);
      CHECK(g.is_connected());
    }
  }
  CHECK_THROWS_AS(all_connected_graphs(9), Error);
}

TEST_CASE("random corpora are deterministic and connected") {
  auto a = random_corpus(12, 25, 7);
  auto b = random_corpus(12, 25, 7);
  REQUIRE(a.size() == 25);
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].n() == b[i].n());
    CHECK(a[i].edges() == b[i].edges());
    CHECK(a[i].is_connected());
    CHECK(a[i].n() <= 12);
  }
  auto c = random_corpus(12, 25, 8);
  bool different = false;
  for (size_t i = 0; i < c.size(); ++i)
    different = different || a[i].edges() != c[i].edges();
  CHECK(different);
}
