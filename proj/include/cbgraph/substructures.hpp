#pragma once

// Isometric-cycle enumeration, forbidden-pattern detection (pentagon+triangle
// and glued-pentagon subgraphs with their diameter conditions), pentagon-pair
// analysis, the structural characterization of convex-ball graphs, and the
// triangle-free classification.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cbgraph/graph.hpp"

namespace cbg {

// Induced 5-cycle in cyclic order.
using Pentagon = std::array<Vertex, 5>;

enum class ForbiddenKind { ISO_CYCLE_BAD_LEN, ISO_PT, PP1_DIAM_GT3, PP2_DIAM_GT2 };
std::string forbidden_name(ForbiddenKind k);

struct SubstructureReport {
  std::vector<int> isometric_cycle_lengths;  // multiset, ascending
  struct Item {
    ForbiddenKind kind;
    std::vector<Vertex> vertices;
  };
  std::vector<Item> forbidden;
};

// All cycles of length 3..max_len that are isometric subgraphs, deduplicated
// up to rotation/reflection. max_len < 0 defaults to 2*diameter+1.
std::vector<std::vector<Vertex>> enumerate_isometric_cycles(
    const Graph& g, const DistanceOracle& d, int max_len = -1);

// Empty `forbidden` list iff the graph has convex balls: no isometric cycle
// of length k >= 4, k != 5; no isometric pentagon+triangle; every induced
// PP1 has diameter <= 3 and every induced PP2 has diameter 2.
SubstructureReport recognize_structural(const Graph& g, const DistanceOracle& d);

// All induced pentagons, each with least vertex first and smaller neighbor
// second (canonical orientation).
std::vector<Pentagon> enumerate_pentagons(const Graph& g);

// Vertex adjacent to all five pentagon vertices, if any (smallest id).
std::optional<Vertex> universal_vertex(const Graph& g, const Pentagon& p);

struct PentagonPairResult {
  enum Kind { DIAM2, UNIVERSAL_VERTEX, NEITHER } kind;
  Vertex witness = -1;  // the universal vertex
  int which = -1;       // 0/1: which pentagon it is universal for
};
// Requires the pentagons to share at least two vertices; NEITHER is only
// reachable on graphs without convex balls.
PentagonPairResult analyze_pentagon_pair(const Graph& g, const DistanceOracle& d,
                                         const Pentagon& p1, const Pentagon& p2);

struct TriangleFreeClass {
  enum Kind { MOORE_DIAM2, WEDGE_DECOMPOSABLE, NOT_CB } kind;
  int degree = 0;                       // for MOORE_DIAM2
  std::vector<VertexSet> blocks;        // for WEDGE_DECOMPOSABLE
};
// Classifies a triangle-free graph: 2-connected with convex balls => Moore
// graph of diameter 2; convex balls but cut vertices => block list (each
// block a pentagon / Petersen / Hoffman-Singleton); otherwise NOT_CB.
TriangleFreeClass classify_triangle_free(const Graph& g);

// 2-connected components as vertex sets (standard lowpoint DFS). Bridges
// yield 2-vertex blocks.
std::vector<VertexSet> biconnected_components(const Graph& g);

}  // namespace cbg
