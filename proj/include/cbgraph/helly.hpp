#pragma once

// Helly independence, Helly numbers (global and diameter-2), simplexes, and
// the constructive reduction of h-independent sets to diameter <= 2.

#include "cbgraph/graph.hpp"

namespace cbg {

// ⋂_{a∈A} conv(A \ {a}) = ∅, with hull(∅) = ∅ (so singletons qualify).
bool is_h_independent(const DistanceOracle& d, const VertexSet& a);

struct HellyCertificate {
  int h = 0;             // largest h-independent size found (exact if !capped)
  bool capped = false;   // an h-independent set of size `cap` exists
  VertexSet witness;     // lexicographically least of size h
  int h2 = 0;            // same, restricted to sets of diameter <= 2
  VertexSet witness2;
};

// Exhaustive subset search up to `cap`; exact when the search closes below
// the cap (no h-independent set of size h+1 exists).
HellyCertificate helly_number(const DistanceOracle& d, int cap = 8);

// Every triple an equilateral metric triangle and every 4-subset has disjoint
// opposite intervals under all three pairings. Requires |A| >= 2.
bool is_simplex(const DistanceOracle& d, const VertexSet& a);

// Transforms an h-independent set into one of the same size with diameter
// <= 2: iterated pull-in of a farthest member toward a potential-minimal
// vertex, then (in the distance-minimal simplex endpoint) replacement by an
// equal-size clique of imprints near one edge. Requires a graph with convex
// balls; throws Error("NotHIndependent") on bad input.
VertexSet reduce_h_independent(const Graph& g, const DistanceOracle& d,
                               const VertexSet& a);

}  // namespace cbg
