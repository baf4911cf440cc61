#pragma once

// Local metric conditions at vertices/edges (triangle, quadrangle, pentagon
// and interval-neighborhood conditions, in all their variants) and the
// recognizers built from their equivalences with ball convexity.

#include <optional>
#include <string>
#include <vector>

#include "cbgraph/convexity.hpp"
#include "cbgraph/graph.hpp"

namespace cbg {

enum class ConditionId {
  TC, QC, PC0, PC1, PC2, PCPLUS, INC0, INC, INCPLUS, TPC0, TPC1, TPC2, TPCPLUS
};
std::string condition_name(ConditionId c);
std::vector<ConditionId> all_conditions();

struct ConditionWitness {
  ConditionId condition;
  bool holds = true;
  // Failing locus: (v; edge x,y) for TC/PC/TPC, (v; x,y; u) for QC,
  // ordered pair (u,v) for INC variants; k is the relevant distance.
  Vertex v = -1, x = -1, y = -1, u = -1;
  int k = -1;
};

enum class PcVariant { PC0, PC1, PC2, PCPLUS };
enum class IncVariant { INC0, INC, INCPLUS };

// d(v,x)=d(v,y)=k>=1 and x~y required; z ranges over B_{k-1}(v).
bool check_tc(const Graph& g, const DistanceOracle& d, Vertex v, Vertex x, Vertex y);
// d(v,x)=d(v,y)=k=d(v,u)-1, u~x,y, x,y non-adjacent; asks for z in B_{k-1}(v)
// making xzyu an induced square.
bool check_qc(const Graph& g, const DistanceOracle& d, Vertex v, Vertex x,
              Vertex y, Vertex u);
// d(v,x)=d(v,y)=k>=2 and x~y required; pentagon xwzw'y with z in B_{k-2}(v),
// quantified per variant.
bool check_pc(const Graph& g, const DistanceOracle& d, PcVariant variant,
              Vertex v, Vertex x, Vertex y);
// Ordered pair u != v.
bool check_inc(const Graph& g, const DistanceOracle& d, IncVariant variant,
               Vertex u, Vertex v);
// TC or PC^variant at the locus.
bool check_tpc(const Graph& g, const DistanceOracle& d, PcVariant variant,
               Vertex v, Vertex x, Vertex y);

// Whether `c` holds at every admissible locus with the relevant distance
// <= max_dist (negative = unbounded). Loci are scanned in ascending order, so
// the reported failure is the minimum locus.
ConditionWitness check_global(const Graph& g, const DistanceOracle& d,
                              ConditionId c, int max_dist = -1);

// One verdict per condition id.
std::vector<ConditionWitness> global_report(const Graph& g,
                                            const DistanceOracle& d,
                                            int max_dist = -1);

enum class RecognizeMethod { DIRECT, INC_TPC0, INC_TPC1, INC_TPC2, INCP_TPCP,
                             STRUCTURAL };
std::vector<RecognizeMethod> all_methods();
std::string method_name(RecognizeMethod m);

// Convex-ball recognizer; all methods agree on every graph. Witness detail
// (center/radius/x/y/z) is populated by DIRECT only.
ConvexityWitness recognize_cb(const Graph& g, RecognizeMethod method);

}  // namespace cbg
