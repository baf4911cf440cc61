#include "cbgraph/triangles.hpp"

#include <algorithm>

namespace cbg {

bool is_metric_triangle(const DistanceOracle& d, Vertex u, Vertex v, Vertex w) {
  if (u == v || v == w || u == w) return false;
  int n = d.n();
  // I(u,v) ∩ I(u,w) = {u}, and the two rotations.
  for (Vertex z = 0; z < n; ++z) {
    if (z != u && d.on_geodesic(u, z, v) && d.on_geodesic(u, z, w)) return false;
    if (z != v && d.on_geodesic(v, z, u) && d.on_geodesic(v, z, w)) return false;
    if (z != w && d.on_geodesic(w, z, u) && d.on_geodesic(w, z, v)) return false;
  }
  return true;
}

MetricTriangle make_metric_triangle(const DistanceOracle& d, Vertex u, Vertex v,
                                    Vertex w) {
  MetricTriangle t;
  t.u = u;
  t.v = v;
  t.w = w;
  t.sides = {d.dist(v, w), d.dist(u, w), d.dist(u, v)};
  std::sort(t.sides.begin(), t.sides.end(), std::greater<int>());
  return t;
}

namespace {

// Vertex of I(a,b) ∩ I(a,c) farthest from a, smallest id among ties.
Vertex farthest_in_double_interval(const DistanceOracle& d, Vertex a, Vertex b,
                                   Vertex c) {
  Vertex best = a;
  int best_dist = 0;
  for (Vertex z = 0; z < d.n(); ++z) {
    if (!d.on_geodesic(a, z, b) || !d.on_geodesic(a, z, c)) continue;
    if (d.dist(a, z) > best_dist) {
      best = z;
      best_dist = d.dist(a, z);
    }
  }
  return best;
}

}  // namespace

MetricTriangle quasi_median(const DistanceOracle& d, Vertex x, Vertex y,
                            Vertex z) {
  Vertex u = farthest_in_double_interval(d, x, y, z);
  Vertex v = farthest_in_double_interval(d, y, u, z);
  Vertex w = farthest_in_double_interval(d, z, u, v);
  return make_metric_triangle(d, u, v, w);
}

bool quasi_median_valid(const DistanceOracle& d, const MetricTriangle& t,
                        Vertex x, Vertex y, Vertex z) {
  Vertex u = t.u, v = t.v, w = t.w;
  return d.dist(x, y) == d.dist(x, u) + d.dist(u, v) + d.dist(v, y) &&
         d.dist(y, z) == d.dist(y, v) + d.dist(v, w) + d.dist(w, z) &&
         d.dist(z, x) == d.dist(z, w) + d.dist(w, u) + d.dist(u, x);
}

std::vector<MetricTriangle> enumerate_metric_triangles(const DistanceOracle& d) {
  std::vector<MetricTriangle> out;
  int n = d.n();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      for (Vertex w = v + 1; w < n; ++w)
        if (is_metric_triangle(d, u, v, w))
          out.push_back(make_metric_triangle(d, u, v, w));
  return out;
}

namespace {

// Every vertex of I(b,c) at the same distance from a?
bool side_uniform(const DistanceOracle& d, Vertex a, Vertex b, Vertex c) {
  int k = d.dist(a, b);
  if (d.dist(a, c) != k) return false;
  for (Vertex z = 0; z < d.n(); ++z)
    if (d.on_geodesic(b, z, c) && d.dist(a, z) != k) return false;
  return true;
}

bool induced_pentagon(const Graph& g, Vertex a, Vertex b, Vertex c, Vertex e,
                      Vertex f) {
  Vertex p[5] = {a, b, c, e, f};
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      if (p[i] == p[j]) return false;
      bool edge = (j - i == 1) || (i == 0 && j == 4);
      if (g.adjacent(p[i], p[j]) != edge) return false;
    }
  return true;
}

}  // namespace

TriangleClass classify(const Graph& g, const DistanceOracle& d,
                       const MetricTriangle& t) {
  TriangleClass out;
  Vertex u = t.u, v = t.v, w = t.w;
  if (t.sides[0] == t.sides[2] && side_uniform(d, u, v, w) &&
      side_uniform(d, v, u, w) && side_uniform(d, w, u, v)) {
    out.kind = TriangleClass::STRONGLY_EQUILATERAL;
    out.size = t.sides[0];
    return out;
  }
  if (t.sides[0] == 2 && t.sides[1] == 2 && t.sides[2] == 1) {
    // Order the corners so the short side comes first: a ~ b, both at
    // distance 2 from c. Then look for the pentagon a b x c y.
    Vertex corners[3] = {u, v, w};
    for (int i = 0; i < 3; ++i) {
      Vertex a = corners[i], b = corners[(i + 1) % 3], c = corners[(i + 2) % 3];
      if (d.dist(a, b) != 1) continue;
      for (Vertex x : g.neighbors(b)) {
        if (!g.adjacent(x, c)) continue;
        for (Vertex y : g.neighbors(c)) {
          if (!g.adjacent(y, a)) continue;
          if (induced_pentagon(g, a, b, x, c, y)) {
            out.kind = TriangleClass::PENTAGON_221;
            out.pentagon = {a, b, x, c, y};
            return out;
          }
        }
      }
    }
    out.kind = TriangleClass::OTHER;
    out.violation = "type (2,2,1) but no induced pentagon through the triangle";
    return out;
  }
  out.kind = TriangleClass::OTHER;
  out.violation = "type (" + std::to_string(t.sides[0]) + "," +
                  std::to_string(t.sides[1]) + "," +
                  std::to_string(t.sides[2]) +
                  ") neither strongly equilateral nor pentagon type";
  return out;
}

}  // namespace cbg
