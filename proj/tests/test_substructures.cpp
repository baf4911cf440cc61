#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "cbgraph/generators.hpp"
#include "cbgraph/substructures.hpp"
#include "doctest.h"

using namespace cbg;

TEST_CASE("isometric cycle enumeration") {
  Graph c4 = make_cycle(4).graph;
  DistanceOracle d4(c4);
  auto cycles4 = enumerate_isometric_cycles(c4, d4);
  REQUIRE(cycles4.size() == 1);
  CHECK(cycles4[0].size() == 4);

  // Every pentagon of the Petersen graph is isometric; nothing longer is.
  Graph p = make_petersen().graph;
  DistanceOracle dp(p);
  auto cycles = enumerate_isometric_cycles(p, dp);
  CHECK(cycles.size() == 12);
  for (const auto& c : cycles) CHECK(c.size() == 5);

  // A tree has no cycles at all.
  Graph path = make_path(5).graph;
  DistanceOracle dt(path);
  CHECK(enumerate_isometric_cycles(path, dt).empty());
}

TEST_CASE("structural recognizer verdicts") {
  Graph p = make_petersen().graph;
  DistanceOracle dp(p);
  CHECK(recognize_structural(p, dp).forbidden.empty());

  Graph pt = make_pt().graph;
  DistanceOracle dpt(pt);
  auto rep = recognize_structural(pt, dpt);
  REQUIRE_FALSE(rep.forbidden.empty());
  bool has_pt = false;
  for (const auto& item : rep.forbidden)
    has_pt = has_pt || item.kind == ForbiddenKind::ISO_PT;
  CHECK(has_pt);

  Graph c6 = make_cycle(6).graph;
  DistanceOracle d6(c6);
  auto rep6 = recognize_structural(c6, d6);
  REQUIRE_FALSE(rep6.forbidden.empty());
  CHECK(rep6.forbidden[0].kind == ForbiddenKind::ISO_CYCLE_BAD_LEN);

  // Each glued-pentagon pattern is caught on its standalone graph.
  Graph pp1 = make_pp1().graph;
  DistanceOracle dpp1(pp1);
  bool has_pp1 = false;
  for (const auto& item : recognize_structural(pp1, dpp1).forbidden)
    has_pp1 = has_pp1 || item.kind == ForbiddenKind::PP1_DIAM_GT3;
  CHECK(has_pp1);

  Graph pp2 = make_pp2().graph;
  DistanceOracle dpp2(pp2);
  bool has_pp2 = false;
  for (const auto& item : recognize_structural(pp2, dpp2).forbidden)
    has_pp2 = has_pp2 || item.kind == ForbiddenKind::PP2_DIAM_GT2;
  CHECK(has_pp2);
}

TEST_CASE("pentagon enumeration and universal vertices") {
  Graph p = make_petersen().graph;
  auto pents = enumerate_pentagons(p);
  CHECK(pents.size() == 12);
  for (const Pentagon& pg : pents) CHECK_FALSE(universal_vertex(p, pg));

  // In the two-pentagon diameter-3 graph only the upper pentagon is coned.
  Graph d3 = make_diameter3().graph;
  int coned = 0;
  for (const Pentagon& pg : enumerate_pentagons(d3))
    coned += universal_vertex(d3, pg).has_value();
  CHECK(coned >= 1);

  // No pentagon of a long chain has a universal vertex.
  Graph chain = make_pentagon_chain(4).graph;
  for (const Pentagon& pg : enumerate_pentagons(chain))
    CHECK_FALSE(universal_vertex(chain, pg));
}

TEST_CASE("pentagon pairs sharing vertices") {
  Graph d3 = make_diameter3().graph;
  DistanceOracle d(d3);
  auto pents = enumerate_pentagons(d3);
  int analyzed = 0;
  for (size_t i = 0; i < pents.size(); ++i)
    for (size_t j = i + 1; j < pents.size(); ++j) {
      int shared = 0;
      for (Vertex a : pents[i])
        for (Vertex b : pents[j]) shared += a == b;
      if (shared < 2) continue;
      ++analyzed;
      auto r = analyze_pentagon_pair(d3, d, pents[i], pents[j]);
      CHECK(r.kind != PentagonPairResult::NEITHER);
    }
  CHECK(analyzed > 0);
}

TEST_CASE("triangle-free classification") {
  auto cls = classify_triangle_free(make_petersen().graph);
  CHECK(cls.kind == TriangleFreeClass::MOORE_DIAM2);
  CHECK(cls.degree == 3);

  auto hs = classify_triangle_free(make_hoffman_singleton().graph);
  CHECK(hs.kind == TriangleFreeClass::MOORE_DIAM2);
  CHECK(hs.degree == 7);

  // Two pentagons sharing one vertex: decomposes into pentagon blocks.
  Graph w = wedge(make_cycle(5).graph, 0, make_cycle(5).graph, 0);
  auto wc = classify_triangle_free(w);
  CHECK(wc.kind == TriangleFreeClass::WEDGE_DECOMPOSABLE);
  CHECK(wc.blocks.size() == 2);

  CHECK(classify_triangle_free(make_cycle(4).graph).kind ==
        TriangleFreeClass::NOT_CB);
}

TEST_CASE("biconnected components") {
  auto blocks = biconnected_components(make_path(4).graph);
  CHECK(blocks.size() == 3);
  for (const VertexSet& b : blocks) CHECK(b.size() == 2);

  CHECK(biconnected_components(make_cycle(5).graph).size() == 1);

  Graph w = wedge(make_cycle(5).graph, 0, make_cycle(5).graph, 0);
  CHECK(biconnected_components(w).size() == 2);
}
