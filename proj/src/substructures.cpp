#include "cbgraph/substructures.hpp"

#include <algorithm>
#include <functional>

#include "cbgraph/convexity.hpp"

namespace cbg {

std::string forbidden_name(ForbiddenKind k) {
  switch (k) {
    case ForbiddenKind::ISO_CYCLE_BAD_LEN: return "ISO_CYCLE_BAD_LEN";
    case ForbiddenKind::ISO_PT: return "ISO_PT";
    case ForbiddenKind::PP1_DIAM_GT3: return "PP1_DIAM_GT3";
    case ForbiddenKind::PP2_DIAM_GT2: return "PP2_DIAM_GT2";
  }
  return "?";
}

namespace {

// Cycle metric of C_len between positions i < j.
int cyc_dist(int i, int j, int len) { return std::min(j - i, len - (j - i)); }

// DFS for cycles of exact length len whose cycle metric equals the graph
// metric. Canonical form: minimum vertex first, second vertex smaller than
// the last (kills rotations and reflections).
void iso_cycle_dfs(const Graph& g, const DistanceOracle& d, int len,
                   std::vector<Vertex>& path, std::vector<char>& used,
                   std::vector<std::vector<Vertex>>& out) {
  int i = (int)path.size();
  if (i == len) {
    if (g.adjacent(path.back(), path[0]) && path[1] < path.back())
      out.push_back(path);
    return;
  }
  for (Vertex v = path[0] + 1; v < g.n(); ++v) {
    if (used[v] || !g.adjacent(path[i - 1], v)) continue;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j)
      ok = d.dist(path[j], v) == cyc_dist(j, i, len);
    if (!ok) continue;
    path.push_back(v);
    used[v] = 1;
    iso_cycle_dfs(g, d, len, path, used, out);
    used[v] = 0;
    path.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Vertex>> enumerate_isometric_cycles(
    const Graph& g, const DistanceOracle& d, int max_len) {
  if (max_len < 0) max_len = std::max(3, 2 * d.diameter() + 1);
  if (max_len < 3) throw Error("PreconditionViolated", "max_len must be >= 3");
  std::vector<std::vector<Vertex>> out;
  for (int len = 3; len <= std::min(max_len, g.n()); ++len)
    for (Vertex s = 0; s < g.n(); ++s) {
      std::vector<Vertex> path{s};
      std::vector<char> used(g.n(), 0);
      used[s] = 1;
      iso_cycle_dfs(g, d, len, path, used, out);
    }
  return out;
}

std::vector<Pentagon> enumerate_pentagons(const Graph& g) {
  std::vector<Pentagon> out;
  // Induced C5 = isometric C5 only in graphs of girth 5; enumerate directly.
  int n = g.n();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b : g.neighbors(a)) {
      if (b <= a) continue;
      for (Vertex c : g.neighbors(b)) {
        if (c <= a || c == b || g.adjacent(a, c)) continue;
        for (Vertex e : g.neighbors(a)) {  // the other neighbor of a
          if (e <= a || e == b || e == c || g.adjacent(e, b) || g.adjacent(e, c))
            continue;
          if (e <= b) continue;  // orientation: second vertex b < last vertex e
          for (Vertex dd : g.neighbors(c)) {
            if (dd <= a || dd == b || dd == e) continue;
            if (!g.adjacent(dd, e) || g.adjacent(dd, a) || g.adjacent(dd, b))
              continue;
            out.push_back({a, b, c, dd, e});
          }
        }
      }
    }
  return out;
}

std::optional<Vertex> universal_vertex(const Graph& g, const Pentagon& p) {
  for (Vertex z = 0; z < g.n(); ++z) {
    bool all = true;
    for (Vertex q : p) all = all && g.adjacent(z, q);
    if (all) return z;
  }
  return std::nullopt;
}

PentagonPairResult analyze_pentagon_pair(const Graph& g, const DistanceOracle& d,
                                         const Pentagon& p1, const Pentagon& p2) {
  VertexSet u(g.n()), s1(g.n()), s2(g.n());
  for (Vertex v : p1) { u.add(v); s1.add(v); }
  for (Vertex v : p2) { u.add(v); s2.add(v); }
  if ((s1 & s2).size() < 2)
    throw Error("DisjointPentagons", "pentagons share fewer than 2 vertices");
  PentagonPairResult r;
  if (d.set_diameter(u) <= 2) {
    r.kind = PentagonPairResult::DIAM2;
    return r;
  }
  if (auto z = universal_vertex(g, p1)) {
    r.kind = PentagonPairResult::UNIVERSAL_VERTEX;
    r.witness = *z;
    r.which = 0;
    return r;
  }
  if (auto z = universal_vertex(g, p2)) {
    r.kind = PentagonPairResult::UNIVERSAL_VERTEX;
    r.witness = *z;
    r.which = 1;
    return r;
  }
  r.kind = PentagonPairResult::NEITHER;
  return r;
}

SubstructureReport recognize_structural(const Graph& g, const DistanceOracle& d) {
  SubstructureReport rep;
  auto cycles = enumerate_isometric_cycles(g, d);
  for (auto& c : cycles) {
    rep.isometric_cycle_lengths.push_back((int)c.size());
    if (c.size() >= 4 && c.size() != 5)
      rep.forbidden.push_back({ForbiddenKind::ISO_CYCLE_BAD_LEN, c});
  }
  std::sort(rep.isometric_cycle_lengths.begin(), rep.isometric_cycle_lengths.end());

  auto pentagons = enumerate_pentagons(g);

  // Isometric pentagon+triangle: a pentagon edge (a,b) plus t ~ a,b with t
  // not adjacent to the other three, the whole 6-set keeping ambient metric.
  for (const Pentagon& p : pentagons) {
    for (int i = 0; i < 5; ++i) {
      Vertex a = p[i], b = p[(i + 1) % 5];
      for (Vertex t : g.neighbors(a)) {
        if (!g.adjacent(t, b)) continue;
        bool outside = true;
        for (Vertex q : p) outside = outside && (t != q);
        if (!outside) continue;
        bool induced = true;
        for (int j = 0; j < 5; ++j)
          if (p[j] != a && p[j] != b && g.adjacent(t, p[j])) induced = false;
        if (!induced) continue;
        VertexSet six(g.n());
        for (Vertex q : p) six.add(q);
        six.add(t);
        if (is_isometric_subgraph(g, six)) {
          std::vector<Vertex> vs(p.begin(), p.end());
          vs.push_back(t);
          rep.forbidden.push_back({ForbiddenKind::ISO_PT, vs});
        }
      }
    }
  }

  // Induced PP1 / PP2 arise as pentagon pairs sharing one edge (union of 8
  // vertices and 9 induced edges) or a 2-path (7 vertices, 8 induced edges).
  auto induced_edges = [&](const VertexSet& s) {
    int cnt = 0;
    auto e = s.elements();
    for (size_t i = 0; i < e.size(); ++i)
      for (size_t j = i + 1; j < e.size(); ++j)
        if (g.adjacent(e[i], e[j])) ++cnt;
    return cnt;
  };
  for (size_t i = 0; i < pentagons.size(); ++i)
    for (size_t j = i + 1; j < pentagons.size(); ++j) {
      VertexSet s(g.n());
      for (Vertex q : pentagons[i]) s.add(q);
      for (Vertex q : pentagons[j]) s.add(q);
      int sz = s.size();
      if (sz == 8 && induced_edges(s) == 9 && d.set_diameter(s) > 3)
        rep.forbidden.push_back({ForbiddenKind::PP1_DIAM_GT3, s.elements()});
      if (sz == 7 && induced_edges(s) == 8 && d.set_diameter(s) > 2)
        rep.forbidden.push_back({ForbiddenKind::PP2_DIAM_GT2, s.elements()});
    }
  return rep;
}

std::vector<VertexSet> biconnected_components(const Graph& g) {
  int n = g.n();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<Vertex, Vertex>> estack;
  std::vector<VertexSet> out;
  int timer = 0;
  // Recursive lowpoint DFS; depth is bounded by n (desk scale).
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
    disc[u] = low[u] = timer++;
    for (Vertex v : g.neighbors(u)) {
      if (v == parent) { parent = -2; continue; }  // skip one parent edge
      if (disc[v] < 0) {
        estack.emplace_back(u, v);
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          VertexSet comp(n);
          std::pair<Vertex, Vertex> e;
          do {
            e = estack.back();
            estack.pop_back();
            comp.add(e.first);
            comp.add(e.second);
          } while (e != std::make_pair(u, v));
          out.push_back(comp);
        }
      } else if (disc[v] < disc[u]) {
        estack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };
  for (Vertex s = 0; s < n; ++s)
    if (disc[s] < 0) dfs(s, -1);
  return out;
}

TriangleFreeClass classify_triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges())
    for (Vertex w : g.neighbors(u))
      if (w != v && g.adjacent(w, v))
        throw Error("HasTriangle", "graph contains a triangle");
  TriangleFreeClass out;
  DistanceOracle d(g);
  if (!has_convex_balls(g, d)) {
    out.kind = TriangleFreeClass::NOT_CB;
    return out;
  }
  auto blocks = biconnected_components(g);
  bool two_connected = g.n() >= 3 && blocks.size() == 1 &&
                       blocks[0].size() == g.n();
  if (two_connected) {
    int deg = g.degree(0);
    bool regular = true;
    for (Vertex v = 0; v < g.n(); ++v) regular = regular && g.degree(v) == deg;
    if (regular && d.diameter() == 2 && g.n() == deg * deg + 1) {
      out.kind = TriangleFreeClass::MOORE_DIAM2;
      out.degree = deg;
      return out;
    }
    // A 2-connected triangle-free CB graph must be Moore; reaching here
    // signals an inconsistency upstream.
    throw Error("Internal", "2-connected triangle-free CB graph not Moore");
  }
  out.kind = TriangleFreeClass::WEDGE_DECOMPOSABLE;
  out.blocks = blocks;
  return out;
}

}  // namespace cbg
