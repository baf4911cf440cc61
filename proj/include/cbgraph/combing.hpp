#pragma once

// Clique-path bicombing: the canonical descending construction of clique
// levels between vertices, the four local normality axioms with a uniqueness
// backtracker, fellow-traveler scans, the constructive shortening step behind
// the falsification-by-fellow-traveler property, and almost-convexity scans.

#include <optional>
#include <vector>

#include "cbgraph/graph.hpp"

namespace cbg {

struct CliquePath {
  Vertex source = -1;
  // C^(0) = {source}, ..., C^(k) = sink clique.
  std::vector<VertexSet> cliques;

  int length() const { return (int)cliques.size() - 1; }
  // Level with the extension convention C^(i) = C^(k) for i beyond the end.
  const VertexSet& level(int i) const {
    return cliques[i >= (int)cliques.size() ? cliques.size() - 1 : i];
  }
};

// B*_1(S) for a clique S: S together with the common neighbors of S.
VertexSet b_star_one(const DistanceOracle& d, const VertexSet& s);

// Descending construction C^(i-1) = B*_1(C^(i)) ∩ B_{i-1}(u) from C^(k)={v}.
// Levels are nonempty on every graph with 2-convex balls; an empty level
// throws Error("EmptyLevel").
CliquePath clique_path(const Graph& g, const DistanceOracle& d, Vertex u, Vertex v);

// Same construction ending at a clique K at uniform distance from u; absent
// when a level empties (possible for |K| >= 2 even on well-behaved graphs).
// Throws Error("NotUniformDistance") if K is not equidistant from u.
std::optional<CliquePath> clique_path_to_set(const Graph& g,
                                             const DistanceOracle& d, Vertex u,
                                             const VertexSet& k_clique);

struct NormalAxiomReport {
  // (i) consecutive levels disjoint with clique union; (ii) levels two apart
  // disjoint with no edges between; (iii) levels three apart at uniform
  // distance 3; (iv) C_i = B*_1(C_{i+1}) ∩ B_1(C_{i-1}).
  bool axiom[4] = {true, true, true, true};
  int failing_axiom = -1;  // 0-based, first failure
  int failing_index = -1;  // level index where it fails
  bool all() const { return axiom[0] && axiom[1] && axiom[2] && axiom[3]; }
};

NormalAxiomReport is_normal(const Graph& g, const DistanceOracle& d,
                            const CliquePath& path);

// All clique sequences {u}=C_0,...,C_k={v} (k=d(u,v)) satisfying the four
// axioms, found by level-by-level backtracking; on graphs with convex balls
// this is exactly {clique_path(u,v)}.
std::vector<CliquePath> enumerate_normal_paths(const Graph& g,
                                               const DistanceOracle& d,
                                               Vertex u, Vertex v);

// A geodesic through the levels of clique_path(u,v); seed 0 takes the least
// id per level, other seeds permute the choice for property tests.
std::vector<Vertex> normal_vertex_path(const Graph& g, const DistanceOracle& d,
                                       Vertex u, Vertex v,
                                       unsigned long long seed = 0);

struct FellowTravelerStats {
  // max over quadruples of max_{i,(x,y) in C_i x C'_i} d(x,y) / denom where
  // denom = max(d(u,u'), d(v,v')); quadruples with denom 0 are skipped.
  double max_ratio = 0.0;
  int max_level_distance = 0;  // numerator of the maximizing quadruple
  Vertex u = -1, u2 = -1, v = -1, v2 = -1;
};

struct Quadruple {
  Vertex u, u2, v, v2;
};

FellowTravelerStats fellow_traveler_scan(const Graph& g, const DistanceOracle& d,
                                         const std::vector<Quadruple>& quads);

// All ordered quadruples, or the specialized families used by the sharper
// bounds: same source with adjacent sinks (bound 3), adjacent sources with
// one common sink (bounds 1 and 4 by distance comparison).
std::vector<Quadruple> all_quadruples(const Graph& g);
std::vector<Quadruple> same_source_adjacent_sinks(const Graph& g);
std::vector<Quadruple> adjacent_sources_same_sink(const Graph& g,
                                                  const DistanceOracle& d,
                                                  bool strict_farther);

// Strictly shorter path with the same endpoints that asynchronously 2-fellow
// travels the input; throws Error("AlreadyGeodesic") on geodesic input.
// Requires a graph with convex balls.
std::vector<Vertex> fftp_shorten(const Graph& g, const DistanceOracle& d,
                                 const std::vector<Vertex>& path);

// Minimum K over monotone reparametrizations matching p1 against p2
// (same endpoints): DP over the index grid with steps (+1,0),(0,+1),(+1,+1)
// minimizing the maximum pointwise distance.
int async_fellow_K(const DistanceOracle& d, const std::vector<Vertex>& p1,
                   const std::vector<Vertex>& p2);

// Smallest K_k such that any x,y on a common sphere S_n(v) with d(x,y) <= k
// are joined by a path of length <= K_k inside B_n(v); -1 if some such pair
// is disconnected inside the ball.
int almost_convexity_constant(const Graph& g, const DistanceOracle& d, int k);

}  // namespace cbg
