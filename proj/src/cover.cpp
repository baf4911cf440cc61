#include "cbgraph/cover.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

#include "cbgraph/conditions.hpp"

namespace cbg {

TwoComplex build_complex(const Graph& g) {
  TwoComplex x;
  x.skeleton = g;
  for (Vertex a = 0; a < g.n(); ++a)
    for (Vertex b : g.neighbors(a)) {
      if (b <= a) continue;
      for (Vertex c : g.neighbors(b))
        if (c > b && g.adjacent(a, c)) x.triangles.push_back({a, b, c});
    }
  x.pentagons = enumerate_pentagons(g);
  return x;
}

namespace {

unsigned long long delta_potential(const DistanceOracle& d,
                                   const std::vector<Vertex>& c, Vertex base) {
  unsigned long long s = 0;
  int k = (int)c.size();
  for (int i = 0; i < k; ++i) {
    int e = d.dist(base, c[i]) + d.dist(base, c[(i + 1) % k]);
    unsigned long long t = 1;
    for (int j = 0; j < e; ++j) t *= 5;
    s += t;
  }
  return s;
}

}  // namespace

ContractionResult contract_cycle(const Graph& g, const DistanceOracle& d,
                                 const std::vector<Vertex>& cycle,
                                 Vertex base) {
  std::vector<Vertex> c = cycle;
  if (c.size() >= 2 && c.front() == c.back()) c.pop_back();
  if (c.empty()) throw Error("PreconditionViolated", "empty cycle");
  int k = (int)c.size();
  for (int i = 0; i < k; ++i)
    if (c[i] != c[(i + 1) % k] && !g.adjacent(c[i], c[(i + 1) % k]))
      throw Error("PreconditionViolated", "input is not a closed walk");

  unsigned long long last = delta_potential(d, c, base) + 1;
  while (true) {
    // Degenerate cleanups: repeated vertices and immediate backtracks.
    bool cleaned = true;
    while (cleaned && c.size() > 2) {
      cleaned = false;
      k = (int)c.size();
      for (int i = 0; i < k; ++i)
        if (c[i] == c[(i + 1) % k]) {
          c.erase(c.begin() + i);
          cleaned = true;
          break;
        }
      if (cleaned) continue;
      for (int i = 0; i < k; ++i)
        if (c[(i + k - 1) % k] == c[(i + 1) % k]) {
          // Drop the spur tip and one copy of its base.
          int j = (i + 1) % k;
          if (j > i) {
            c.erase(c.begin() + j);
            c.erase(c.begin() + i);
          } else {
            c.erase(c.begin() + i);
            c.erase(c.begin() + j);
          }
          cleaned = true;
          break;
        }
    }
    if (c.size() <= 2) return {ContractionResult::CONSTANT, {}};

    unsigned long long pot = delta_potential(d, c, base);
    if (pot >= last)
      throw Error("Internal", "contraction potential failed to decrease");
    last = pot;

    k = (int)c.size();
    bool all_base = true;
    for (Vertex v : c) all_base = all_base && v == base;
    if (all_base) return {ContractionResult::CONSTANT, {}};

    int top = 0;
    for (int i = 1; i < k; ++i)
      if (d.dist(base, c[i]) > d.dist(base, c[top])) top = i;
    int r = d.dist(base, c[top]);
    Vertex prev = c[(top + k - 1) % k], cur = c[top], next = c[(top + 1) % k];

    if (d.dist(base, prev) == r - 1 && d.dist(base, next) == r - 1) {
      // Both circuit neighbors sit one level down: shortcut across the peak.
      if (!g.adjacent(prev, next) && prev != next)
        return {ContractionResult::STUCK, c};
      c.erase(c.begin() + top);
      continue;
    }
    // Pick a circuit neighbor still at the top level and rewrite that edge.
    int dir = d.dist(base, next) == r ? +1 : -1;
    Vertex other = dir > 0 ? next : prev;
    int insert_at = dir > 0 ? top + 1 : top;  // between cur and other

    Vertex tz = -1;
    for (Vertex z : g.neighbors(cur))
      if (d.dist(base, z) == r - 1 && g.adjacent(z, other)) {
        tz = z;
        break;
      }
    if (tz >= 0) {
      c.insert(c.begin() + insert_at, tz);
      continue;
    }
    // Pentagon move: cur w z w' other with w,w' one level and z two levels
    // down.
    bool moved = false;
    for (Vertex w : g.neighbors(cur)) {
      if (d.dist(base, w) != r - 1) continue;
      for (Vertex wp : g.neighbors(other)) {
        if (d.dist(base, wp) != r - 1) continue;
        for (Vertex z : g.neighbors(w)) {
          if (d.dist(base, z) != r - 2 || !g.adjacent(z, wp)) continue;
          std::vector<Vertex> seg =
              dir > 0 ? std::vector<Vertex>{w, z, wp}
                      : std::vector<Vertex>{wp, z, w};
          c.insert(c.begin() + insert_at, seg.begin(), seg.end());
          moved = true;
          break;
        }
        if (moved) break;
      }
      if (moved) break;
    }
    if (!moved) return {ContractionResult::STUCK, c};
  }
}

int h1_rank_gf2(const TwoComplex& x) {
  const Graph& g = x.skeleton;
  if (!g.is_connected())
    throw Error("PreconditionViolated", "skeleton must be connected");
  auto edges = g.edges();
  std::map<std::pair<Vertex, Vertex>, int> idx;
  for (int i = 0; i < (int)edges.size(); ++i) idx[edges[i]] = i;
  auto edge_index = [&](Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return idx.at({a, b});
  };
  int m = (int)edges.size();
  int words = (m + 63) / 64;
  std::vector<std::vector<uint64_t>> rows;
  auto add_boundary = [&](const std::vector<Vertex>& cell) {
    std::vector<uint64_t> row(words, 0);
    int c = (int)cell.size();
    for (int i = 0; i < c; ++i) {
      int e = edge_index(cell[i], cell[(i + 1) % c]);
      row[e >> 6] ^= uint64_t(1) << (e & 63);
    }
    rows.push_back(row);
  };
  for (const auto& t : x.triangles) add_boundary({t[0], t[1], t[2]});
  for (const auto& p : x.pentagons)
    add_boundary({p[0], p[1], p[2], p[3], p[4]});

  // GF(2) row reduction of the boundary matrix.
  int rank = 0;
  std::vector<int> pivot_of_row;
  std::vector<std::vector<uint64_t>> basis;
  for (auto row : rows) {
    for (size_t b = 0; b < basis.size(); ++b) {
      int p = pivot_of_row[b];
      if (row[p >> 6] >> (p & 63) & 1)
        for (int w = 0; w < words; ++w) row[w] ^= basis[b][w];
    }
    int piv = -1;
    for (int e = 0; e < m && piv < 0; ++e)
      if (row[e >> 6] >> (e & 63) & 1) piv = e;
    if (piv >= 0) {
      basis.push_back(row);
      pivot_of_row.push_back(piv);
      ++rank;
    }
  }
  int cycle_rank = m - g.n() + 1;
  return cycle_rank - rank;
}

namespace {

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int a) { return up[a] == a ? a : up[a] = find(up[a]); }
  void unite(int a, int b) { up[find(a)] = find(b); }
};

}  // namespace

CoverState build_universal_cover(const Graph& g, Vertex base_image, int radius,
                                 bool validate) {
  if (radius < 0) throw Error("BadParameters", "radius must be >= 0");
  DistanceOracle dg(g);
  if (validate) {
    for (Vertex v = 0; v < g.n(); ++v)
      for (int r = 1; r <= std::min(3, dg.eccentricity(v)); ++r) {
        auto w = is_convex(dg, dg.ball(v, r));
        if (!w)
          throw Error("LocalConditionsFail",
                      "ball of radius " + std::to_string(r) + " around " +
                          std::to_string(v) + " is not convex");
      }
  }

  std::vector<Vertex> image{base_image};
  std::vector<int> height{0};
  std::vector<std::vector<Vertex>> adj(1);
  auto cov_adjacent = [&](Vertex a, Vertex b) {
    return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
  };
  auto add_edge = [&](Vertex a, Vertex b) {
    if (a != b && !cov_adjacent(a, b)) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  };

  std::vector<Vertex> sphere{0};  // current outer layer
  for (int i = 0; i < radius; ++i) {
    // Z: outer-layer vertices paired with unmatched base-graph neighbors.
    std::vector<std::pair<Vertex, Vertex>> z;  // (cover w, image z)
    for (Vertex wt : sphere) {
      VertexSet seen(g.n());
      seen.add(image[wt]);
      for (Vertex xt : adj[wt]) seen.add(image[xt]);
      for (Vertex cand : g.neighbors(image[wt]))
        if (!seen.contains(cand)) z.emplace_back(wt, cand);
    }
    std::sort(z.begin(), z.end());
    UnionFind uf((int)z.size());
    for (size_t a = 0; a < z.size(); ++a)
      for (size_t b = a + 1; b < z.size(); ++b)
        if (z[a].second == z[b].second &&
            cov_adjacent(z[a].first, z[b].first))
          uf.unite((int)a, (int)b);

    // Consistency of the equivalence: members of one class carry one image
    // vertex, are pairwise adjacent, and (beyond layer 0) share a lower
    // common neighbor.
    for (size_t a = 0; a < z.size(); ++a)
      for (size_t b = a + 1; b < z.size(); ++b) {
        if (uf.find((int)a) != uf.find((int)b)) continue;
        if (z[a].second != z[b].second)
          throw Error("LocalConditionsFail", "mixed images in a cover class");
        Vertex wa = z[a].first, wb = z[b].first;
        if (wa == wb) continue;
        if (!cov_adjacent(wa, wb))
          throw Error("LocalConditionsFail",
                      "cover class is not transitively adjacent");
        if (i >= 1) {
          bool lower = false;
          for (Vertex y : adj[wa])
            lower = lower || (height[y] <= i - 1 && cov_adjacent(y, wb));
          if (!lower)
            throw Error("LocalConditionsFail",
                        "adjacent class members lack a lower common neighbor");
        }
      }

    // Materialize classes in discovery order.
    std::map<int, Vertex> class_vertex;
    std::vector<Vertex> next_sphere;
    for (size_t a = 0; a < z.size(); ++a) {
      int root = uf.find((int)a);
      Vertex nv;
      auto it = class_vertex.find(root);
      if (it == class_vertex.end()) {
        nv = (Vertex)image.size();
        image.push_back(z[a].second);
        height.push_back(i + 1);
        adj.emplace_back();
        class_vertex[root] = nv;
        next_sphere.push_back(nv);
      } else {
        nv = it->second;
      }
      add_edge(z[a].first, nv);
    }

    // Intra-layer edges by the shared-parent and pentagon-bridge rules.
    for (size_t a = 0; a < next_sphere.size(); ++a)
      for (size_t b = a + 1; b < next_sphere.size(); ++b) {
        Vertex va = next_sphere[a], vb = next_sphere[b];
        if (!g.adjacent(image[va], image[vb])) continue;
        bool link = false;
        // (1) a shared parent in the previous layer.
        for (Vertex w : adj[va])
          link = link || (height[w] == i && cov_adjacent(w, vb));
        // (2) parents bridged through a vertex one layer further down.
        if (!link && i >= 1) {
          for (Vertex w : adj[va]) {
            if (height[w] != i) continue;
            for (Vertex wp : adj[vb]) {
              if (height[wp] != i) continue;
              for (Vertex y : adj[w])
                if (height[y] <= i - 1 && cov_adjacent(y, wp)) {
                  link = true;
                  break;
                }
              if (link) break;
            }
            if (link) break;
          }
        }
        if (link) add_edge(va, vb);
      }
    sphere = next_sphere;
  }

  CoverState st;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a < (Vertex)adj.size(); ++a)
    for (Vertex b : adj[a])
      if (a < b) edges.emplace_back(a, b);
  st.cover = Graph((int)image.size(), edges);
  st.image = image;
  st.height = height;
  st.base = 0;
  st.radius = radius;
  return st;
}

CoverInvariantReport verify_cover_invariants(const Graph& g,
                                             const CoverState& st) {
  CoverInvariantReport rep;
  const Graph& c = st.cover;
  DistanceOracle dc(c);
  int R = st.radius;
  auto note = [&](bool& flag, const std::string& msg) {
    flag = false;
    if (rep.detail.empty()) rep.detail = msg;
  };

  // (P) layers agree with graph distance from the base.
  for (Vertex v = 0; v < c.n(); ++v)
    if (dc.dist(st.base, v) != st.height[v]) {
      note(rep.p, "height mismatch at cover vertex " + std::to_string(v));
      break;
    }

  // (Q) base-point conditions away from the truncation boundary.
  for (Vertex u = 0; u < c.n() && rep.q; ++u) {
    if (u == st.base || st.height[u] > R - 1) continue;
    if (!check_inc(c, dc, IncVariant::INC, u, st.base))
      note(rep.q, "interval-neighborhood condition fails at " +
                      std::to_string(u));
  }
  for (auto [x, y] : c.edges()) {
    if (!rep.q) break;
    if (st.height[x] > R - 1 || st.height[y] > R - 1) continue;
    int k = dc.dist(st.base, x);
    if (k != dc.dist(st.base, y) || k < 1) continue;
    if (!check_tpc(c, dc, PcVariant::PC0, st.base, x, y))
      note(rep.q, "triangle-pentagon condition fails at edge " +
                      std::to_string(x) + "-" + std::to_string(y));
  }

  // (R) inner closed unit balls map isomorphically onto full balls of g;
  // (T) boundary-layer ones map isomorphically onto their images.
  for (Vertex u = 0; u < c.n(); ++u) {
    bool inner = st.height[u] <= R - 2;
    bool bdry = st.height[u] == R - 1;
    if (!inner && !bdry) continue;
    std::vector<Vertex> nbhd{u};
    for (Vertex w : c.neighbors(u)) nbhd.push_back(w);
    bool ok = true;
    VertexSet images(g.n());
    for (Vertex w : nbhd) {
      if (images.contains(st.image[w])) ok = false;
      images.add(st.image[w]);
    }
    for (size_t a = 0; a < nbhd.size() && ok; ++a)
      for (size_t b = a + 1; b < nbhd.size() && ok; ++b)
        if (c.adjacent(nbhd[a], nbhd[b]) !=
            g.adjacent(st.image[nbhd[a]], st.image[nbhd[b]]))
          ok = false;
    if (inner && ok) {
      // Surjectivity onto the whole closed ball of the image.
      VertexSet full = g.neighbor_set(st.image[u]);
      full.add(st.image[u]);
      ok = images == full;
    }
    if (!ok) {
      note(inner ? rep.r : rep.t,
           "closed-ball isomorphism fails at cover vertex " +
               std::to_string(u));
    }
  }

  // (S) pentagon closure: any cover path over a base-graph 5-cycle closes.
  for (Vertex w = 0; w < c.n() && rep.s; ++w) {
    if (st.height[w] > R - 1) continue;
    for (Vertex x : c.neighbors(w)) {
      if (st.height[x] > R - 1) continue;
      for (Vertex y : c.neighbors(w)) {
        if (y == x || st.height[y] > R - 1) continue;
        for (Vertex u : c.neighbors(x)) {
          if (u == w || u == y || st.height[u] > R - 1) continue;
          for (Vertex v : c.neighbors(y)) {
            if (v == w || v == x || v == u || st.height[v] > R - 1) continue;
            Vertex iu = st.image[u], ix = st.image[x], iw = st.image[w],
                   iy = st.image[y], iv = st.image[v];
            Vertex q[5] = {iu, ix, iw, iy, iv};
            bool distinct = true;
            for (int a = 0; a < 5; ++a)
              for (int b = a + 1; b < 5; ++b) distinct &= q[a] != q[b];
            if (!distinct || !g.adjacent(iu, iv)) continue;
            if (!c.adjacent(u, v)) {
              note(rep.s, "pentagon closure fails over " + std::to_string(u) +
                              ".." + std::to_string(v));
              break;
            }
          }
          if (!rep.s) break;
        }
        if (!rep.s) break;
      }
      if (!rep.s) break;
    }
  }
  return rep;
}

ConvexityWitness cover_is_cb_up_to(const CoverState& st, int r) {
  if (r > st.radius - 3)
    throw Error("MarginTooSmall", "need r <= radius - 3");
  if (r < 1) throw Error("BadParameters", "r must be >= 1");
  DistanceOracle dc(st.cover);
  for (Vertex v = 0; v < st.cover.n(); ++v) {
    if (st.height[v] > st.radius - 2 * r) continue;
    for (int rho = 1; rho <= r; ++rho) {
      ConvexityWitness w = is_convex(dc, dc.ball(v, rho));
      if (!w) {
        w.center = v;
        w.radius = rho;
        return w;
      }
    }
  }
  return {};
}

}  // namespace cbg
