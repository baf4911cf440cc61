#pragma once

// Breadth-first search orders with parents, dismantlability verification in
// graph powers, iterated-domination cores, and stabilized convex sets of
// automorphisms.

#include <optional>
#include <vector>

#include "cbgraph/graph.hpp"

namespace cbg {

struct BfsOrder {
  std::vector<Vertex> order;   // permutation, order[0] = base
  std::vector<Vertex> parent;  // parent[base] = base
};

// BFS order from `base`; the parent of v is the vertex whose expansion first
// reached v. tiebreak_seed permutes the neighbor scan (0 = ascending ids) so
// tests can quantify over several orders.
BfsOrder bfs_order(const Graph& g, Vertex base,
                   unsigned long long tiebreak_seed = 0);

// Validates the BFS layering invariants of the order itself.
bool is_valid_bfs_order(const Graph& g, const BfsOrder& o);

// Checks that `order` is a dismantling order of g^p: every non-first vertex v
// has an earlier g^p-neighbor w with B_1(v) ⊆ B_1(w) (closed balls) inside
// the subgraph of g^p induced by the prefix up to v. Returns the first
// violator, or nothing when the order dismantles.
std::optional<Vertex> verify_dismantling(const Graph& g,
                                         const std::vector<Vertex>& order,
                                         int p);

// Deletes a dominated vertex (smallest id) until none remains.
VertexSet compute_core(const Graph& g);

using Automorphism = std::vector<Vertex>;

// Bijective and edge-preserving in both directions.
bool is_automorphism(const Graph& g, const Automorphism& f);

// Orbit partition of f.
std::vector<std::vector<Vertex>> orbits(const Automorphism& f);

// Smallest (then lexicographically least) convex set of diameter <= 2 with
// f(S) = S, found by scanning orbit-closed sets in increasing size. Throws
// Error("NotFound") when none exists (impossible on graphs with convex
// balls); Error("PreconditionViolated") if f is not an automorphism.
VertexSet stabilized_convex_set(const Graph& g, const DistanceOracle& d,
                                const Automorphism& f);

}  // namespace cbg
