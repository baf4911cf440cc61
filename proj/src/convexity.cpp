#include "cbgraph/convexity.hpp"

#include <random>

namespace cbg {

namespace {

// Shared scan: pairs (x,y) ascending, z ascending, so the first hit is the
// lexicographic minimum witness.
ConvexityWitness scan_convex(const DistanceOracle& d, const VertexSet& s,
                             int max_pair_dist) {
  auto mem = s.elements();
  for (size_t i = 0; i < mem.size(); ++i)
    for (size_t j = i + 1; j < mem.size(); ++j) {
      Vertex x = mem[i], y = mem[j];
      int dxy = d.dist(x, y);
      if (max_pair_dist >= 0 && dxy > max_pair_dist) continue;
      for (Vertex z = 0; z < d.n(); ++z)
        if (!s.contains(z) && d.dist(x, z) + d.dist(z, y) == dxy) {
          ConvexityWitness w;
          w.verdict = false;
          w.x = x;
          w.y = y;
          w.z = z;
          return w;
        }
    }
  return {};
}

}  // namespace

ConvexityWitness is_convex(const DistanceOracle& d, const VertexSet& s) {
  if (s.empty()) throw Error("PreconditionViolated", "is_convex of empty set");
  return scan_convex(d, s, -1);
}

ConvexityWitness is_k_convex(const DistanceOracle& d, const VertexSet& s, int k) {
  if (k < 2) throw Error("PreconditionViolated", "k-convexity needs k >= 2");
  if (s.empty()) throw Error("PreconditionViolated", "is_k_convex of empty set");
  return scan_convex(d, s, k);
}

static ConvexityWitness ball_scan(const Graph& g, const DistanceOracle& d,
                                  int max_pair_dist) {
  int diam = d.diameter();
  for (Vertex v = 0; v < g.n(); ++v)
    for (int r = 1; r <= diam; ++r) {
      ConvexityWitness w = scan_convex(d, d.ball(v, r), max_pair_dist);
      if (!w) {
        w.center = v;
        w.radius = r;
        return w;
      }
    }
  return {};
}

ConvexityWitness has_convex_balls(const Graph& g, const DistanceOracle& d,
                                  bool unrestricted) {
  // 3-convexity of all balls is equivalent to convexity of all balls; the
  // bounded check is the default and the unrestricted one is kept for
  // cross-validation.
  return ball_scan(g, d, unrestricted ? -1 : 3);
}

ConvexityWitness has_k_convex_balls(const Graph& g, const DistanceOracle& d, int k) {
  if (k != 2 && k != 3)
    throw Error("PreconditionViolated", "ball k-convexity supports k in {2,3}");
  return ball_scan(g, d, k);
}

HullDiameterReport hull_preserves_diameter(const Graph& g, const DistanceOracle& d,
                                           int trials, uint64_t seed) {
  HullDiameterReport rep;
  auto check = [&](const VertexSet& s) {
    int ds = d.set_diameter(s);
    int dh = d.set_diameter(d.convex_hull(s));
    if (dh != ds) {
      rep.preserved = false;
      rep.violating_set = s;
      rep.set_diam = ds;
      rep.hull_diam = dh;
      return false;
    }
    return true;
  };
  for (Vertex u = 0; u < g.n() && rep.preserved; ++u)
    for (Vertex v = u + 1; v < g.n(); ++v) {
      VertexSet s(g.n());
      s.add(u);
      s.add(v);
      if (!check(s)) break;
    }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials && rep.preserved; ++t) {
    VertexSet s(g.n());
    int size = 2 + (int)(rng() % 3);
    while (s.size() < std::min(size, g.n())) s.add((Vertex)(rng() % g.n()));
    check(s);
  }
  return rep;
}

}  // namespace cbg
