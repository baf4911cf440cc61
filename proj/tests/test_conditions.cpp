#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "cbgraph/conditions.hpp"
#include "cbgraph/generators.hpp"
#include "doctest.h"

using namespace cbg;

TEST_CASE("triangle condition on small graphs") {
  Graph k3 = make_clique(3).graph;
  DistanceOracle d3(k3);
  CHECK(check_tc(k3, d3, 0, 1, 2));

  // In the pentagon, the far edge has no common lower neighbor.
  Graph c5 = make_cycle(5).graph;
  DistanceOracle d5(c5);
  CHECK_FALSE(check_tc(c5, d5, 0, 2, 3));
  // ... but the pentagon condition covers it, so TPC holds there.
  CHECK(check_pc(c5, d5, PcVariant::PC0, 0, 2, 3));
  CHECK(check_tpc(c5, d5, PcVariant::PC0, 0, 2, 3));
  CHECK(check_global(c5, d5, ConditionId::TPC0).holds);
  ConditionWitness w = check_global(c5, d5, ConditionId::TC);
  CHECK_FALSE(w.holds);
  CHECK(w.k == 2);
}

TEST_CASE("pentagon condition variants and preconditions") {
  Graph c5 = make_cycle(5).graph;
  DistanceOracle d(c5);
  for (PcVariant v : {PcVariant::PC0, PcVariant::PC1, PcVariant::PC2,
                      PcVariant::PCPLUS})
    CHECK(check_pc(c5, d, v, 0, 2, 3));
  // k = 1 loci are outside the pentagon condition's domain.
  CHECK_THROWS_AS(check_pc(c5, d, PcVariant::PC0, 2, 1, 3), Error);
  // Global bare-PC scans skip k = 1 loci instead of failing them.
  CHECK(check_global(c5, d, ConditionId::PC0).holds);
}

TEST_CASE("quadrangle condition holds in the 4-cycle") {
  Graph c4 = make_cycle(4).graph;
  DistanceOracle d(c4);
  CHECK(check_qc(c4, d, 0, 1, 3, 2));
  CHECK(check_global(c4, d, ConditionId::QC).holds);
}

TEST_CASE("quadrangle condition fails in the squared grid family") {
  NamedGraph ng = make_gk(2);
  Graph gp = power_graph(ng.graph, 2);
  DistanceOracle d(gp);
  CHECK_FALSE(check_qc(gp, d, ng.labels.at("v"), ng.labels.at("x"),
                       ng.labels.at("y"), ng.labels.at("u")));
}

TEST_CASE("interval neighborhood conditions") {
  Graph c4 = make_cycle(4).graph;
  DistanceOracle d4(c4);
  // Neighbors of 0 toward 2 are the non-adjacent pair {1,3}.
  CHECK_FALSE(check_inc(c4, d4, IncVariant::INC0, 0, 2));
  ConditionWitness w = check_global(c4, d4, ConditionId::INC);
  CHECK_FALSE(w.holds);

  Graph c7 = make_cycle(7).graph;
  DistanceOracle d7(c7);
  for (ConditionId c : {ConditionId::INC0, ConditionId::INC,
                        ConditionId::INCPLUS})
    CHECK(check_global(c7, d7, c).holds);

  Graph p = make_petersen().graph;
  DistanceOracle dp(p);
  CHECK(check_global(p, dp, ConditionId::INCPLUS).holds);
}

TEST_CASE("max_dist bounds the scanned loci") {
  // The 7-cycle satisfies everything below distance 3 but TPC fails at 3.
  Graph c7 = make_cycle(7).graph;
  DistanceOracle d(c7);
  CHECK(check_global(c7, d, ConditionId::TPC0, 2).holds);
  CHECK_FALSE(check_global(c7, d, ConditionId::TPC0, 3).holds);
}

TEST_CASE("recognizer methods agree on mixed verdicts") {
  for (const auto& [g, expect] :
       std::vector<std::pair<Graph, bool>>{{make_petersen().graph, true},
                                           {make_diameter3().graph, true},
                                           {make_pentagon_chain(3).graph, true},
                                           {make_pt().graph, false},
                                           {make_pp1().graph, false},
                                           {make_cycle(6).graph, false}}) {
    for (RecognizeMethod m : all_methods())
      CHECK(recognize_cb(g, m).verdict == expect);
  }
}

TEST_CASE("global report covers every condition") {
  Graph c5 = make_cycle(5).graph;
  DistanceOracle d(c5);
  auto rep = global_report(c5, d);
  CHECK(rep.size() == all_conditions().size());
  for (const ConditionWitness& w : rep)
    if (w.condition != ConditionId::TC) CHECK(w.holds);
}

TEST_CASE("condition names are unique and stable") {
  CHECK(condition_name(ConditionId::TC) == "TC");
  CHECK(condition_name(ConditionId::INCPLUS) == "INC+");
  std::vector<std::string> names;
  for (ConditionId c : all_conditions()) names.push_back(condition_name(c));
  std::sort(names.begin(), names.end());
  CHECK(std::unique(names.begin(), names.end()) == names.end());
}
