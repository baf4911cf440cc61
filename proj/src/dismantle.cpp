#include "cbgraph/dismantle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace cbg {

BfsOrder bfs_order(const Graph& g, Vertex base, unsigned long long seed) {
  if (!g.is_connected())
    throw Error("PreconditionViolated", "graph must be connected");
  int n = g.n();
  // Seeded vertex priority applied to every neighbor scan; seed 0 keeps
  // ascending ids.
  std::vector<Vertex> rank(n);
  std::iota(rank.begin(), rank.end(), 0);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::shuffle(rank.begin(), rank.end(), rng);
  }
  BfsOrder o;
  o.parent.assign(n, -1);
  o.order.reserve(n);
  o.order.push_back(base);
  o.parent[base] = base;
  for (size_t head = 0; head < o.order.size(); ++head) {
    Vertex x = o.order[head];
    std::vector<Vertex> nbrs = g.neighbors(x);
    std::sort(nbrs.begin(), nbrs.end(),
              [&](Vertex a, Vertex b) { return rank[a] < rank[b]; });
    for (Vertex y : nbrs)
      if (o.parent[y] < 0) {
        o.parent[y] = x;
        o.order.push_back(y);
      }
  }
  return o;
}

bool is_valid_bfs_order(const Graph& g, const BfsOrder& o) {
  int n = g.n();
  if ((int)o.order.size() != n || (int)o.parent.size() != n) return false;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = o.order[i];
    if (v < 0 || v >= n || pos[v] >= 0) return false;
    pos[v] = i;
  }
  Vertex base = o.order[0];
  if (o.parent[base] != base) return false;
  // Distance layers must be nondecreasing along the order.
  std::vector<int> dist(n, -1);
  dist[base] = 0;
  for (int i = 1; i < n; ++i) {
    Vertex v = o.order[i], p = o.parent[v];
    if (!g.adjacent(p, v) || pos[p] >= i) return false;
    dist[v] = dist[p] + 1;
  }
  for (int i = 1; i < n; ++i)
    if (dist[o.order[i - 1]] > dist[o.order[i]]) return false;
  // The parent is the earliest-ordered neighbor in the previous layer.
  for (int i = 1; i < n; ++i) {
    Vertex v = o.order[i];
    for (Vertex w : g.neighbors(v))
      if (dist[w] == dist[v] - 1 && pos[w] < pos[o.parent[v]]) return false;
  }
  return true;
}

std::optional<Vertex> verify_dismantling(const Graph& g,
                                         const std::vector<Vertex>& order,
                                         int p) {
  if (p < 1) throw Error("BadParameters", "power must be >= 1");
  int n = g.n();
  if ((int)order.size() != n)
    throw Error("PreconditionViolated", "order is not a permutation");
  Graph gp = p == 1 ? g : power_graph(g, p);
  VertexSet prefix(n);
  prefix.add(order[0]);
  for (int t = 1; t < n; ++t) {
    Vertex v = order[t];
    prefix.add(v);
    VertexSet bv = gp.neighbor_set(v) & prefix;
    bv.add(v);
    bool dominated = false;
    for (int s = 0; s < t && !dominated; ++s) {
      Vertex w = order[s];
      if (!gp.adjacent(v, w)) continue;
      VertexSet bw = gp.neighbor_set(w) & prefix;
      bw.add(w);
      dominated = bv.is_subset_of(bw);
    }
    if (!dominated) return v;
  }
  return std::nullopt;
}

VertexSet compute_core(const Graph& g) {
  VertexSet alive = VertexSet::full(g.n());
  bool changed = true;
  while (changed && alive.size() > 1) {
    changed = false;
    for (Vertex v : alive.elements()) {
      VertexSet bv = g.neighbor_set(v) & alive;
      bv.add(v);
      for (Vertex w : (g.neighbor_set(v) & alive).elements()) {
        VertexSet bw = g.neighbor_set(w) & alive;
        bw.add(w);
        if (bv.is_subset_of(bw)) {
          alive.remove(v);
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
  }
  return alive;
}

bool is_automorphism(const Graph& g, const Automorphism& f) {
  int n = g.n();
  if ((int)f.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (Vertex v : f) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (auto [u, v] : g.edges())
    if (!g.adjacent(f[u], f[v])) return false;
  return true;
}

std::vector<std::vector<Vertex>> orbits(const Automorphism& f) {
  int n = (int)f.size();
  std::vector<char> done(n, 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex v = 0; v < n; ++v) {
    if (done[v]) continue;
    std::vector<Vertex> orb;
    Vertex x = v;
    do {
      done[x] = 1;
      orb.push_back(x);
      x = f[x];
    } while (x != v);
    std::sort(orb.begin(), orb.end());
    out.push_back(orb);
  }
  return out;
}

namespace {

// Depth-first choice of orbits with union size exactly `target`; reports
// every qualifying set via `visit`, which returns true to stop the search.
bool pick_orbits(const std::vector<std::vector<Vertex>>& orbs, size_t idx,
                 int remaining, VertexSet& acc,
                 const std::function<bool(const VertexSet&)>& visit) {
  if (remaining == 0) return visit(acc);
  if (idx == orbs.size()) return false;
  for (size_t i = idx; i < orbs.size(); ++i) {
    int sz = (int)orbs[i].size();
    if (sz > remaining) continue;
    for (Vertex v : orbs[i]) acc.add(v);
    if (pick_orbits(orbs, i + 1, remaining - sz, acc, visit)) return true;
    for (Vertex v : orbs[i]) acc.remove(v);
  }
  return false;
}

}  // namespace

VertexSet stabilized_convex_set(const Graph& g, const DistanceOracle& d,
                                const Automorphism& f) {
  if (!is_automorphism(g, f))
    throw Error("PreconditionViolated", "not an automorphism");
  auto orbs = orbits(f);
  // Every stabilized convex set is a union of orbits equal to its own hull,
  // so scanning orbit unions by size finds the minimum directly.
  for (int size = 1; size <= g.n(); ++size) {
    std::optional<VertexSet> best;
    auto visit = [&](const VertexSet& s) {
      if (d.set_diameter(s) <= 2 && d.convex_hull(s) == s &&
          (!best || s.lex_less(*best)))
        best = s;
      return false;  // keep scanning this size for the lex-least witness
    };
    VertexSet acc(g.n());
    pick_orbits(orbs, 0, size, acc, visit);
    if (best) return *best;
  }
  throw Error("NotFound", "no stabilized convex set of diameter <= 2");
}

}  // namespace cbg
