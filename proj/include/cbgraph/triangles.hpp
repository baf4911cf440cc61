#pragma once

// Metric triangles, quasi-medians, and their classification: in graphs with
// convex balls every metric triangle is strongly equilateral or has type
// (2,2,1) and sits inside a pentagon.

#include <array>
#include <string>
#include <vector>

#include "cbgraph/graph.hpp"

namespace cbg {

struct MetricTriangle {
  Vertex u = -1, v = -1, w = -1;
  // Side lengths d(v,w), d(u,w), d(u,v) sorted descending.
  std::array<int, 3> sides{0, 0, 0};
};

struct TriangleClass {
  enum Kind { STRONGLY_EQUILATERAL, PENTAGON_221, OTHER } kind;
  int size = 0;                       // side length when equilateral
  std::array<Vertex, 5> pentagon{};   // u v x w y for the (2,2,1) case
  std::string violation;              // populated for OTHER
};

// I(u,v) ∩ I(u,w) = {u} and the two symmetric conditions.
bool is_metric_triangle(const DistanceOracle& d, Vertex u, Vertex v, Vertex w);

// Greedy quasi-median of (x,y,z): pick u in I(x,y) ∩ I(x,z) farthest from x
// (ties by smallest id), then v for y against (u,z)-side, then w; the result
// is a metric triangle satisfying the three concatenation equalities.
MetricTriangle quasi_median(const DistanceOracle& d, Vertex x, Vertex y, Vertex z);

// Do the three quasi-median concatenation equalities hold for (x,y,z)?
bool quasi_median_valid(const DistanceOracle& d, const MetricTriangle& t,
                        Vertex x, Vertex y, Vertex z);

// All unordered triples forming metric triangles (u < v < w).
std::vector<MetricTriangle> enumerate_metric_triangles(const DistanceOracle& d);

MetricTriangle make_metric_triangle(const DistanceOracle& d, Vertex u, Vertex v,
                                    Vertex w);

// STRONGLY_EQUILATERAL: equilateral and every vertex of each side interval is
// at uniform distance from the opposite vertex. PENTAGON_221: type (2,2,1)
// inside an induced pentagon u v x w y. OTHER is unreachable on graphs with
// convex balls.
TriangleClass classify(const Graph& g, const DistanceOracle& d,
                       const MetricTriangle& t);

}  // namespace cbg
