#pragma once

// Deterministic constructors for the named graphs used throughout the test
// corpus, plus seeded random corpora for property testing. Each named
// constructor self-checks the structural facts its figure is defined by
// (regularity, girth, diameter, labeled-vertex distances) so that a
// mis-transcription fails loudly at construction time.

#include <map>
#include <string>
#include <vector>

#include "cbgraph/graph.hpp"

namespace cbg {

// A generated graph together with the figure's labeled vertices
// (e.g. "u", "v", "x", "y", "w", "w'").
struct NamedGraph {
  Graph graph;
  std::map<std::string, Vertex> labels;
};

NamedGraph make_cycle(int n);
NamedGraph make_clique(int n);
NamedGraph make_path(int n);
NamedGraph make_petersen();
NamedGraph make_hoffman_singleton();
// Pentagon + triangle glued on an edge (6 vertices).
NamedGraph make_pt();
// Two pentagons glued on an edge (8 vertices).
NamedGraph make_pp1();
// Two pentagons glued on a path of length 2 (7 vertices).
NamedGraph make_pp2();
// 10-vertex CB graph with d(v,x)=d(v,y)=3 where TC(v,xy) does not apply and
// the labeled w, w' have no common neighbor in B_1(v).
NamedGraph make_ctreex();
// 10-vertex diameter-3 CB graph made of two pentagons and two extra vertices;
// only the upper pentagon has a universal vertex.
NamedGraph make_diameter3();
// Chain of `sections` >= 2 pentagons glued in a path-like way through layers
// of triangles; CB, and no pentagon has a universal vertex.
NamedGraph make_pentagon_chain(int sections);
// Circulant Cay(Z_n, S): i ~ i +- s (mod n) for s in S.
NamedGraph make_circulant(int n, const std::vector<int>& connection);
// Triangular-grid family G_k (k >= 2): CB graph whose k-th power fails the
// quadrangle condition at the labeled u, v, x, y.
NamedGraph make_gk(int k);
// Wedge: identify vertex a of g1 with vertex b of g2.
Graph wedge(const Graph& g1, Vertex a, const Graph& g2, Vertex b);

// Dispatch by family name ("petersen", "hoffman-singleton", "c5", "cycle",
// "clique", "path", "pt", "pp1", "pp2", "ctreex", "diameter3", "chain",
// "circulant", "gk"). Numeric parameters in `params`; `connection` used by
// circulant only.
NamedGraph make_family(const std::string& name, const std::vector<int>& params);

// Connected Erdos-Renyi-style samples over a range of densities,
// deterministic per seed. n_max <= 14.
std::vector<Graph> random_corpus(int n_max, int count, uint64_t seed);

// All connected graphs with n vertices up to isomorphism (n <= 8),
// generated by vertex augmentation with canonical-form deduplication.
std::vector<Graph> all_connected_graphs(int n);

}  // namespace cbg
