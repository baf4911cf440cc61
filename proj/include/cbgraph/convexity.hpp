#pragma once

// Convexity and k-convexity predicates on vertex sets and on all balls; the
// definitional recognizer for graphs with convex balls, used as the
// ground-truth oracle by every other recognizer.

#include <optional>

#include "cbgraph/graph.hpp"

namespace cbg {

struct ConvexityWitness {
  bool verdict = true;
  // Present when verdict is false: x,y inside the set, z outside on an
  // (x,y)-geodesic; for ball checks center/radius identify the failing ball.
  Vertex center = -1;
  int radius = -1;
  Vertex x = -1, y = -1, z = -1;
  explicit operator bool() const { return verdict; }
};

// True iff every interval between members stays inside s. The false witness
// is the lexicographically least (x, y, z).
ConvexityWitness is_convex(const DistanceOracle& d, const VertexSet& s);

// Same restricted to member pairs at distance <= k (k >= 2).
ConvexityWitness is_k_convex(const DistanceOracle& d, const VertexSet& s, int k);

// True iff every ball B_r(v), 1 <= r <= diameter, is convex. Scan order is v
// ascending, r ascending, so the first witness is deterministic.
// Implemented as the k=3 check (the two are equivalent); `unrestricted`
// cross-validates with the unbounded definition.
ConvexityWitness has_convex_balls(const Graph& g, const DistanceOracle& d,
                                  bool unrestricted = false);

// All balls k-convex, k in {2,3}.
ConvexityWitness has_k_convex_balls(const Graph& g, const DistanceOracle& d, int k);

// Checks diam(conv(S)) == diam(S) over all vertex pairs S = {u,v} plus
// `trials` random larger subsets (seeded); returns false on first violation.
struct HullDiameterReport {
  bool preserved = true;
  VertexSet violating_set;
  int set_diam = 0, hull_diam = 0;
};
HullDiameterReport hull_preserves_diameter(const Graph& g, const DistanceOracle& d,
                                           int trials, uint64_t seed = 1);

}  // namespace cbg
