#pragma once

// Triangle-pentagon complexes, a sound cycle-contraction reducer, GF(2)
// first homology, and the inductive bounded-radius universal-cover
// construction with its invariant checks.

#include <array>
#include <string>
#include <vector>

#include "cbgraph/convexity.hpp"
#include "cbgraph/graph.hpp"
#include "cbgraph/substructures.hpp"

namespace cbg {

struct TwoComplex {
  Graph skeleton;
  std::vector<std::array<Vertex, 3>> triangles;  // induced C3, ascending ids
  std::vector<Pentagon> pentagons;               // induced C5, canonical order
};

// Cells are exactly the induced triangles and pentagons of the skeleton.
TwoComplex build_complex(const Graph& g);

struct ContractionResult {
  enum Kind { CONSTANT, STUCK } kind;
  std::vector<Vertex> stuck_cycle;  // state at which no rule fired
};

// Rewrites the closed walk toward the constant circuit at `base` using the
// shortcut / triangle / pentagon moves, each strictly decreasing the
// exponential potential keyed to distances from the base. STUCK is sound but
// not a proof of non-contractibility.
ContractionResult contract_cycle(const Graph& g, const DistanceOracle& d,
                                 const std::vector<Vertex>& cycle, Vertex base);

// Rank of the cycle space modulo cell boundaries over GF(2); zero is
// necessary (not sufficient) for simple connectivity.
int h1_rank_gf2(const TwoComplex& x);

struct CoverState {
  Graph cover;                // the truncated cover's 1-skeleton
  std::vector<Vertex> image;  // cover vertex -> base-graph vertex
  std::vector<int> height;    // BFS layer from the cover base
  Vertex base = 0;            // always vertex 0
  int radius = 0;
};

// Layer-by-layer construction of the universal cover of the triangle-
// pentagon complex out to radius R. When `validate` is set (default), the
// base graph must have all balls of radius <= 3 convex; class consistency is
// asserted during construction. Throws Error("LocalConditionsFail") on
// violations.
CoverState build_universal_cover(const Graph& g, Vertex base_image, int radius,
                                 bool validate = true);

struct CoverInvariantReport {
  // layered-ball equality, base-point interval-neighborhood + triangle-
  // pentagon conditions, closed-unit-ball isomorphisms (inner and boundary),
  // and the virtual-pentagon closure.
  bool p = true, q = true, r = true, s = true, t = true;
  std::string detail;  // first failure description
  bool all() const { return p && q && r && s && t; }
};

CoverInvariantReport verify_cover_invariants(const Graph& g,
                                             const CoverState& state);

// Convexity of all balls of radius <= r centered within height R-2r of the
// truncated cover; requires r <= R-3 (Error("MarginTooSmall") otherwise).
ConvexityWitness cover_is_cb_up_to(const CoverState& state, int r);

}  // namespace cbg
