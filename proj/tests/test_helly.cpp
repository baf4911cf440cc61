#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "cbgraph/generators.hpp"
#include "cbgraph/helly.hpp"
#include "doctest.h"

using namespace cbg;

TEST_CASE("h-independence basics") {
  Graph p = make_petersen().graph;
  DistanceOracle d(p);
  // Leave-one-out hulls of a singleton are empty, so singletons qualify.
  CHECK(is_h_independent(d, VertexSet::of(10, {0})));
  CHECK(is_h_independent(d, VertexSet::of(10, {0, 1})));
  CHECK_THROWS_AS(is_h_independent(d, VertexSet(10)), Error);
}

TEST_CASE("Helly numbers of named graphs") {
  Graph p = make_petersen().graph;
  DistanceOracle d(p);
  HellyCertificate c = helly_number(d, 10);
  CHECK(c.h == 4);
  CHECK(c.h2 == 4);
  CHECK_FALSE(c.capped);
  CHECK(is_h_independent(d, c.witness));
  CHECK(d.set_diameter(c.witness2) <= 2);

  // The classic independent quadruple of the Petersen graph.
  CHECK(is_h_independent(d, VertexSet::of(10, {0, 1, 7, 9})));

  // In a clique every leave-one-out family already has empty intersection.
  Graph k4 = make_clique(4).graph;
  DistanceOracle dk(k4);
  HellyCertificate ck = helly_number(dk, 4);
  CHECK(ck.h == 4);
  CHECK(ck.h2 == 4);

  // The 4-cycle has tiny Helly number: any third vertex hits the core.
  Graph c4 = make_cycle(4).graph;
  DistanceOracle d4(c4);
  HellyCertificate c4c = helly_number(d4, 4);
  CHECK(c4c.h == 2);
  CHECK(c4c.h2 == 2);

  CHECK_THROWS_AS(helly_number(d, 1), Error);
}

TEST_CASE("simplexes") {
  Graph k4 = make_clique(4).graph;
  DistanceOracle dk(k4);
  CHECK(is_simplex(dk, VertexSet::full(4)));

  Graph c6 = make_cycle(6).graph;
  DistanceOracle d6(c6);
  CHECK(is_simplex(d6, VertexSet::of(6, {0, 2, 4})));
  // 0 and 3 are joined by geodesics through both 1,2 and 5,4.
  CHECK_FALSE(is_simplex(d6, VertexSet::of(6, {0, 1, 3})));
  CHECK_THROWS_AS(is_simplex(d6, VertexSet::of(6, {0})), Error);
}

TEST_CASE("reduction to diameter 2 preserves size and independence") {
  CHECK_THROWS_AS(
      [] {
        Graph p = make_petersen().graph;
        DistanceOracle d(p);
        reduce_h_independent(p, d, VertexSet::full(10));
      }(),
      Error);  // the full vertex set is not h-independent

  // Scan a diameter-3 corpus for maximal h-independent sets of diameter 3
  // and reduce each one.
  int reduced = 0;
  for (const Graph& g : {make_ctreex().graph, make_diameter3().graph,
                         make_pentagon_chain(2).graph}) {
    DistanceOracle d(g);
    int n = g.n();
    std::vector<char> hind(size_t(1) << n, 0);
    auto set_of = [&](unsigned mask) {
      VertexSet s(n);
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1) s.add(v);
      return s;
    };
    for (unsigned m = 1; m < (1u << n); ++m)
      hind[m] = is_h_independent(d, set_of(m));
    for (unsigned m = 1; m < (1u << n); ++m) {
      if (!hind[m]) continue;
      bool maximal = true;
      for (int v = 0; v < n && maximal; ++v)
        if (!(m >> v & 1) && hind[m | (1u << v)]) maximal = false;
      VertexSet a = set_of(m);
      if (!maximal || d.set_diameter(a) <= 2) continue;
      VertexSet r = reduce_h_independent(g, d, a);
      CHECK(r.size() == a.size());
      CHECK(d.set_diameter(r) <= 2);
      CHECK(is_h_independent(d, r));
      ++reduced;
    }
  }
  CHECK(reduced > 0);
}
