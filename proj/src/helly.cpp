#include "cbgraph/helly.hpp"

#include <algorithm>
#include <vector>

namespace cbg {

bool is_h_independent(const DistanceOracle& d, const VertexSet& a) {
  auto members = a.elements();
  if (members.empty())
    throw Error("PreconditionViolated", "set must be nonempty");
  VertexSet meet = VertexSet::full(d.n());
  for (Vertex drop : members) {
    VertexSet rest = a;
    rest.remove(drop);
    meet &= d.convex_hull(rest);  // hull of the empty set is empty
    if (meet.empty()) return true;
  }
  return false;
}

namespace {

// Lexicographically first h-independent s-subset, optionally restricted to
// diameter <= 2; empty optional when none exists.
bool find_h_independent(const DistanceOracle& d, int s, bool diam2,
                        std::vector<Vertex>& chosen, Vertex next,
                        VertexSet& out) {
  if ((int)chosen.size() == s) {
    VertexSet a(d.n());
    for (Vertex v : chosen) a.add(v);
    if (diam2 && d.set_diameter(a) > 2) return false;
    if (!is_h_independent(d, a)) return false;
    out = a;
    return true;
  }
  for (Vertex v = next; v <= d.n() - (s - (int)chosen.size()); ++v) {
    if (diam2) {
      bool close = true;
      for (Vertex w : chosen) close = close && d.dist(v, w) <= 2;
      if (!close) continue;
    }
    chosen.push_back(v);
    if (find_h_independent(d, s, diam2, chosen, v + 1, out)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

HellyCertificate helly_number(const DistanceOracle& d, int cap) {
  if (cap < 2) throw Error("BadParameters", "cap must be >= 2");
  HellyCertificate cert;
  for (int s = 1; s <= std::min(cap, d.n()); ++s) {
    VertexSet found;
    std::vector<Vertex> chosen;
    if (find_h_independent(d, s, false, chosen, 0, found)) {
      cert.h = s;
      cert.witness = found;
    }
    chosen.clear();
    if (find_h_independent(d, s, true, chosen, 0, found)) {
      cert.h2 = s;
      cert.witness2 = found;
    }
  }
  cert.capped = cert.h >= cap;
  return cert;
}

bool is_simplex(const DistanceOracle& d, const VertexSet& a) {
  auto m = a.elements();
  if (m.size() < 2) throw Error("PreconditionViolated", "need |A| >= 2");
  auto metric_triangle = [&](Vertex u, Vertex v, Vertex w) {
    for (Vertex z = 0; z < d.n(); ++z) {
      if (z != u && d.on_geodesic(u, z, v) && d.on_geodesic(u, z, w)) return false;
      if (z != v && d.on_geodesic(v, z, u) && d.on_geodesic(v, z, w)) return false;
      if (z != w && d.on_geodesic(w, z, u) && d.on_geodesic(w, z, v)) return false;
    }
    return true;
  };
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = i + 1; j < m.size(); ++j)
      for (size_t k = j + 1; k < m.size(); ++k) {
        if (d.dist(m[i], m[j]) != d.dist(m[j], m[k]) ||
            d.dist(m[j], m[k]) != d.dist(m[i], m[k]))
          return false;
        if (!metric_triangle(m[i], m[j], m[k])) return false;
      }
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = i + 1; j < m.size(); ++j)
      for (size_t k = j + 1; k < m.size(); ++k)
        for (size_t l = k + 1; l < m.size(); ++l) {
          Vertex q[4] = {m[i], m[j], m[k], m[l]};
          int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
          for (auto& pr : pairings)
            if (d.interval(q[pr[0]], q[pr[1]])
                    .intersects(d.interval(q[pr[2]], q[pr[3]])))
              return false;
        }
  return true;
}

namespace {

long long potential(const DistanceOracle& d, const std::vector<Vertex>& a,
                    Vertex z) {
  long long s = 0;
  for (Vertex v : a)
    if (v != z) s += d.dist(z, v);
  return s;
}

}  // namespace

VertexSet reduce_h_independent(const Graph& g, const DistanceOracle& d,
                               const VertexSet& a_in) {
  if (!is_h_independent(d, a_in))
    throw Error("NotHIndependent", "input set is not h-independent");
  VertexSet a = a_in;
  size_t size = a.elements().size();

  // Phase 1: pull members toward a potential-minimal vertex while possible.
  while (true) {
    if (d.set_diameter(a) <= 2) return a;
    auto members = a.elements();
    long long best = -1;
    for (Vertex z : members) {
      long long p = potential(d, members, z);
      if (best < 0 || p < best) best = p;
    }
    bool stepped = false;
    for (Vertex z : members) {
      if (potential(d, members, z) != best) continue;
      VertexSet rest = a;
      rest.remove(z);
      VertexSet hull = d.convex_hull(rest);
      for (Vertex u : members) {
        if (u == z) continue;
        // Candidates x != u strictly inside I(u,z) and the hull.
        VertexSet cand = d.interval(u, z) & hull;
        cand.remove(u);
        if (cand.empty()) continue;
        Vertex x = -1;
        for (Vertex c : cand.elements())
          if (!a.contains(c)) {
            x = c;
            break;
          }
        if (x < 0) continue;  // would shrink the set
        VertexSet b = a;
        b.remove(u);
        b.add(x);
        if (!is_h_independent(d, b))
          throw Error("Internal", "pull-in step broke h-independence");
        if (potential(d, b.elements(), z) >= best)
          throw Error("Internal", "pull-in step did not decrease the potential");
        a = b;
        stepped = true;
        break;
      }
      if (stepped) break;
    }
    if (!stepped) break;
  }

  // Stable with diameter >= 3: a distance-minimal simplex. Replace it by the
  // clique of imprints on an edge hanging off one member.
  auto s = a.elements();
  if (s.size() != size) throw Error("Internal", "reduction changed the size");
  int k = d.dist(s[0], s[1]);
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (d.dist(s[i], s[j]) != k)
        throw Error("Internal", "stable set is not equilateral");
  Vertex u = s[0], v = s[1];
  Vertex x = -1;
  for (Vertex c : g.neighbors(v))
    if (d.on_geodesic(u, c, v)) {
      x = c;
      break;
    }
  if (x < 0) throw Error("Internal", "no interval neighbor");
  VertexSet clique(g.n());
  clique.add(v);
  clique.add(x);
  for (Vertex w : s) {
    if (w == u || w == v) continue;
    Vertex imprint = -1;
    for (Vertex z : g.neighbors(v)) {
      if (!g.adjacent(z, x)) continue;
      if (d.on_geodesic(v, z, w) && d.on_geodesic(x, z, w)) {
        imprint = z;
        break;
      }
    }
    if (imprint < 0)
      throw Error("Internal", "missing imprint; graph lacks convex balls");
    clique.add(imprint);
  }
  auto ce = clique.elements();
  if (ce.size() < size) throw Error("Internal", "imprint clique too small");
  for (size_t i = 0; i < ce.size(); ++i)
    for (size_t j = i + 1; j < ce.size(); ++j)
      if (!g.adjacent(ce[i], ce[j]))
        throw Error("Internal", "imprints do not form a clique");
  VertexSet out(g.n());
  for (size_t i = 0; i < size; ++i) out.add(ce[i]);
  return out;
}

}  // namespace cbg
