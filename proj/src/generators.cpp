#include "cbgraph/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "cbgraph/graph.hpp"

namespace cbg {

namespace {

using Edge = std::pair<Vertex, Vertex>;

void require(bool ok, const std::string& what) {
  if (!ok) throw Error("GeneratorSelfTest", what);
}

// Length of a shortest cycle, or 0 if the graph is acyclic.
int girth(const Graph& g) {
  int best = 0;
  for (Vertex s = 0; s < g.n(); ++s) {
    // BFS from s tracking parents; a non-tree edge closing at depths d1,d2
    // witnesses a cycle of length d1+d2+1.
    std::vector<int> depth(g.n(), -1), parent(g.n(), -1);
    std::vector<Vertex> q{s};
    depth[s] = 0;
    for (size_t h = 0; h < q.size(); ++h) {
      Vertex u = q[h];
      for (Vertex v : g.neighbors(u)) {
        if (depth[v] < 0) {
          depth[v] = depth[u] + 1;
          parent[v] = u;
          q.push_back(v);
        } else if (v != parent[u]) {
          int len = depth[u] + depth[v] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

void check_regular_girth_diam(const Graph& g, int deg, int gi, int diam,
                              const std::string& name) {
  for (Vertex v = 0; v < g.n(); ++v)
    require(g.degree(v) == deg, name + ": not " + std::to_string(deg) + "-regular");
  require(girth(g) == gi, name + ": wrong girth");
  require(DistanceOracle(g).diameter() == diam, name + ": wrong diameter");
}

}  // namespace

NamedGraph make_cycle(int n) {
  if (n < 3) throw Error("BadParameters", "cycle needs n >= 3");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return {Graph(n, es), {}};
}

NamedGraph make_clique(int n) {
  if (n < 1) throw Error("BadParameters", "clique needs n >= 1");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return {Graph(n, es), {}};
}

NamedGraph make_path(int n) {
  if (n < 1) throw Error("BadParameters", "path needs n >= 1");
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return {Graph(n, es), {}};
}

NamedGraph make_petersen() {
  // Outer cycle 0..4, inner pentagram 5..9, spokes i ~ i+5.
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(i, i + 5);
    es.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  Graph g(10, es);
  check_regular_girth_diam(g, 3, 5, 2, "petersen");
  return {g, {}};
}

NamedGraph make_hoffman_singleton() {
  // Five pentagons P_h (cyclic) and five pentagrams Q_i (step 2);
  // vertex j of P_h is joined to vertex h*i+j (mod 5) of Q_i.
  auto P = [](int h, int j) { return 5 * h + j; };
  auto Q = [](int i, int j) { return 25 + 5 * i + j; };
  std::vector<Edge> es;
  for (int h = 0; h < 5; ++h)
    for (int j = 0; j < 5; ++j) {
      es.emplace_back(P(h, j), P(h, (j + 1) % 5));
      es.emplace_back(Q(h, j), Q(h, (j + 2) % 5));
    }
  for (int h = 0; h < 5; ++h)
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        es.emplace_back(P(h, j), Q(i, (h * i + j) % 5));
  Graph g(50, es);
  require(g.m() == 175, "hoffman-singleton: wrong edge count");
  check_regular_girth_diam(g, 7, 5, 2, "hoffman-singleton");
  return {g, {}};
}

NamedGraph make_pt() {
  // Pentagon 0-1-2-3-4-0 and triangle 3-4-5 glued on edge {3,4}.
  Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {3, 5}, {4, 5}});
  require(girth(g) == 3 && DistanceOracle(g).diameter() == 3, "pt: bad shape");
  return {g, {}};
}

NamedGraph make_pp1() {
  // Pentagons 0-1-2-3-4-0 and 3-4-5-6-7-3 sharing edge {3,4}.
  Graph g(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
              {4, 5}, {5, 6}, {6, 7}, {7, 3}});
  require(girth(g) == 5 && DistanceOracle(g).diameter() == 4, "pp1: bad shape");
  return {g, {}};
}

NamedGraph make_pp2() {
  // Hexagon 0..5 plus center 6 adjacent to the opposite pair 1 and 4:
  // pentagons 1-2-3-4-6 and 1-0-5-4-6 share the length-2 path 1-6-4.
  Graph g(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 6}, {6, 4}});
  require(girth(g) == 5 && DistanceOracle(g).diameter() == 3, "pp2: bad shape");
  return {g, {}};
}

NamedGraph make_ctreex() {
  // Labeled: x=0, y=1, w=2, w'=6, v=9; interior 3,4,5 (row 1), 7,8 (row 2).
  enum { X = 0, Y = 1, W = 2, N12 = 3, N13 = 4, N14 = 5, WP = 6,
         N21 = 7, N22 = 8, V = 9 };
  Graph g(10, {{X, W},    {X, N12},  {X, Y},    {Y, WP},   {Y, N14},
               {W, N12},  {W, N13},  {W, N21},  {N12, N13}, {N12, N21},
               {N12, N22}, {N13, N14}, {N13, N21}, {N13, N22}, {N13, WP},
               {N14, N21}, {N14, N22}, {N14, WP}, {WP, N22}, {N21, N22},
               {N21, V},  {N22, V}});
  DistanceOracle d(g);
  require(d.dist(V, X) == 3 && d.dist(V, Y) == 3, "ctreex: labeled distances");
  // TC(v,xy) must not apply: x and y have no common neighbor at all.
  for (Vertex z = 0; z < 10; ++z)
    require(!(g.adjacent(z, X) && g.adjacent(z, Y)), "ctreex: TC applies");
  // No z in B_1(v) adjacent to both w and w'.
  for (Vertex z = 0; z < 10; ++z)
    require(!(d.dist(V, z) <= 1 && g.adjacent(z, W) && g.adjacent(z, WP)),
            "ctreex: w,w' have a low common neighbor");
  return {g, {{"x", X}, {"y", Y}, {"w", W}, {"w'", WP}, {"v", V}}};
}

NamedGraph make_diameter3() {
  // Two pentagons e-a-b-c-d and d-e-f-g-h plus s (universal for defgh) and t.
  enum { A, B, C, D, E, F, G, H, S, T };
  Graph g(10, {{E, A}, {A, B}, {B, C}, {C, D}, {D, E},
               {E, F}, {F, G}, {G, H}, {H, D},
               {G, S}, {S, F}, {E, S}, {S, D}, {H, S},
               {S, T}, {S, C}, {C, T}, {T, F}, {T, B}});
  DistanceOracle d(g);
  require(d.diameter() == 3, "diameter3: wrong diameter");
  for (Vertex p : {D, E, F, G, H})
    require(g.adjacent(S, p), "diameter3: s not universal for upper pentagon");
  // Lower pentagon deabc has no universal vertex.
  for (Vertex z = 0; z < 10; ++z) {
    bool all = true;
    for (Vertex p : {D, E, A, B, C}) all = all && g.adjacent(z, p);
    require(!all, "diameter3: lower pentagon has a universal vertex");
  }
  return {g, {{"a", A}, {"b", B}, {"c", C}, {"d", D}, {"e", E},
              {"f", F}, {"g", G}, {"h", H}, {"s", S}, {"t", T}}};
}

NamedGraph make_pentagon_chain(int sections) {
  if (sections < 2) throw Error("BadParameters", "chain needs >= 2 sections");
  int k = sections;
  // Pentagon t occupies ids 5t..5t+4 (cycle c ~ c+1 mod 5); apexes follow.
  auto P = [](int t, int c) { return 5 * t + c; };
  auto A = [k](int j) { return 5 * k + j; };
  std::vector<Edge> es;
  for (int t = 0; t < k; ++t)
    for (int c = 0; c < 5; ++c) es.emplace_back(P(t, c), P(t, (c + 1) % 5));
  for (int t = 0; t + 1 < k; ++t) {
    es.emplace_back(P(t, 2), P(t + 1, 0));
    es.emplace_back(P(t, 3), P(t + 1, 1));
    es.emplace_back(P(t, 3), P(t + 1, 0));  // diagonal of the square
  }
  for (int j = 0; j < k; ++j) {
    if (j > 0) {  // right apex of the gluing into pentagon j
      es.emplace_back(A(j), P(j - 1, 3));
      es.emplace_back(A(j), P(j, 0));
      es.emplace_back(A(j), P(j, 3));
      es.emplace_back(A(j), P(j, 4));
    }
    if (j + 1 < k) {  // left apex of the gluing out of pentagon j
      es.emplace_back(A(j), P(j, 3));
      es.emplace_back(A(j), P(j + 1, 0));
      es.emplace_back(A(j), P(j, 4));
      es.emplace_back(A(j), P(j, 0));
    }
  }
  Graph g(6 * k, es);
  require(DistanceOracle(g).diameter() == 2 * k, "chain: wrong diameter");
  // No pentagon of the chain has a universal vertex.
  for (int t = 0; t < k; ++t)
    for (Vertex z = 0; z < g.n(); ++z) {
      bool all = true;
      for (int c = 0; c < 5; ++c) all = all && g.adjacent(z, P(t, c));
      require(!all, "chain: pentagon has a universal vertex");
    }
  return {g, {}};
}

NamedGraph make_circulant(int n, const std::vector<int>& connection) {
  if (n < 3) throw Error("BadParameters", "circulant needs n >= 3");
  std::vector<Edge> es;
  for (int s : connection) {
    if (s <= 0 || s >= n) throw Error("BadParameters", "bad connection element");
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + s) % n);
  }
  return {Graph(n, es), {}};
}

NamedGraph make_gk(int k) {
  if (k < 2) throw Error("BadParameters", "gk needs k >= 2");
  // Lower triangular grid rows y=1..k-1 (row y has y vertices), whose row k
  // coincides with the interior of the widest row of the inverted upper grid
  // (rows y=0..k+1, row y has k+2-y vertices), plus a tail path of k-1
  // vertices from the upper apex to v.
  std::map<std::pair<int, int>, Vertex> a_id, b_id;
  std::vector<Vertex> c_id(k);  // c_id[0] aliases the upper apex
  int next = 0;
  for (int y = 1; y < k; ++y)
    for (int x = 1; x <= y; ++x) a_id[{x, y}] = next++;
  for (int y = 0; y <= k + 1; ++y)
    for (int x = 0; x <= k + 1 - y; ++x) b_id[{x, y}] = next++;
  c_id[0] = b_id[{0, k + 1}];
  for (int j = 1; j < k; ++j) c_id[j] = next++;
  // Row k of the lower grid is b(1..k, 0).
  auto A = [&](int x, int y) { return y == k ? b_id[{x, 0}] : a_id[{x, y}]; };
  std::vector<Edge> es;
  for (int y = 2; y <= k; ++y)
    for (int x = 1; x <= y; ++x) {
      if (x > 1) {
        es.emplace_back(A(x, y), A(x - 1, y));
        es.emplace_back(A(x, y), A(x - 1, y - 1));
      }
      if (x < y) es.emplace_back(A(x, y), A(x, y - 1));
    }
  for (int y = 0; y <= k + 1; ++y)
    for (int x = 0; x <= k + 1 - y; ++x) {
      if (x > 0) es.emplace_back(b_id[{x, y}], b_id[{x - 1, y}]);
      if (y > 0) {
        es.emplace_back(b_id[{x, y}], b_id[{x, y - 1}]);
        es.emplace_back(b_id[{x, y}], b_id[{x + 1, y - 1}]);
      }
    }
  for (int j = 1; j < k; ++j) es.emplace_back(c_id[j], c_id[j - 1]);
  Graph g(next, es);
  Vertex u = a_id[{1, 1}];
  Vertex xl = b_id[{0, 0}], yl = b_id[{k + 1, 0}], v = c_id[k - 1];
  DistanceOracle d(g);
  require(d.dist(u, xl) == k && d.dist(u, yl) == k, "gk: u-x/y distance");
  require(d.dist(u, v) == 3 * k - 1, "gk: u-v distance");
  require(d.dist(xl, yl) == k + 1, "gk: x-y distance");
  require(d.dist(v, xl) == 2 * k && d.dist(v, yl) == 2 * k, "gk: v-x/y distance");
  return {g, {{"u", u}, {"v", v}, {"x", xl}, {"y", yl}}};
}

Graph wedge(const Graph& g1, Vertex a, const Graph& g2, Vertex b) {
  // g1 keeps its ids; vertices of g2 map to n1..n1+n2-2 with b -> a.
  int n1 = g1.n();
  auto map2 = [&](Vertex v) {
    if (v == b) return a;
    return Vertex(v < b ? n1 + v : n1 + v - 1);
  };
  std::vector<Edge> es = g1.edges();
  for (auto [u, v] : g2.edges()) es.emplace_back(map2(u), map2(v));
  return Graph(n1 + g2.n() - 1, es);
}

NamedGraph make_family(const std::string& name, const std::vector<int>& params) {
  auto p = [&](size_t i) -> int {
    if (i >= params.size()) throw Error("BadParameters", "missing parameter");
    return params[i];
  };
  if (name == "petersen") return make_petersen();
  if (name == "hoffman-singleton") return make_hoffman_singleton();
  if (name == "pt") return make_pt();
  if (name == "pp1") return make_pp1();
  if (name == "pp2") return make_pp2();
  if (name == "ctreex") return make_ctreex();
  if (name == "diameter3") return make_diameter3();
  if (name == "chain") return make_pentagon_chain(p(0));
  if (name == "cycle") return make_cycle(p(0));
  if (name == "c5") return make_cycle(5);
  if (name == "clique") return make_clique(p(0));
  if (name == "path") return make_path(p(0));
  if (name == "gk") return make_gk(p(0));
  if (name == "circulant") {
    std::vector<int> conn(params.begin() + 1, params.end());
    return make_circulant(p(0), conn);
  }
  throw Error("UnknownFamily", name);
}

std::vector<Graph> random_corpus(int n_max, int count, uint64_t seed) {
  if (n_max > 14) throw Error("BadParameters", "random_corpus caps n at 14");
  if (n_max < 2) throw Error("BadParameters", "n_max too small");
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  while ((int)out.size() < count) {
    int n = 2 + (int)(rng() % (uint64_t)(n_max - 1));
    double density = 0.1 + 0.8 * ((rng() >> 11) * 0x1.0p-53);
    std::vector<Edge> es;
    // Random recursive tree keeps every sample connected.
    for (int v = 1; v < n; ++v) es.emplace_back(v, (Vertex)(rng() % v));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (((rng() >> 11) * 0x1.0p-53) < density) es.emplace_back(u, v);
    out.emplace_back(n, es);
  }
  return out;
}

namespace {

// Canonical form: minimum upper-triangular adjacency bitstring over all
// vertex permutations. Fine for n <= 8.
uint64_t canonical_code(const Graph& g) {
  int n = g.n();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t best = ~uint64_t(0);
  do {
    uint64_t code = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++bit)
        if (g.adjacent(perm[i], perm[j])) code |= uint64_t(1) << bit;
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Graph from_code(int n, uint64_t code) {
  std::vector<Edge> es;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if ((code >> bit) & 1) es.emplace_back(i, j);
  return Graph(n, es);
}

}  // namespace

std::vector<Graph> all_connected_graphs(int n) {
  if (n < 1 || n > 8) throw Error("BadParameters", "supported range is 1..8");
  // Augment each (n-1)-vertex connected graph by one vertex with every
  // nonempty neighborhood; removing a non-cut vertex inverts the step, so all
  // isomorphism classes are reached.
  if (n == 1) return {Graph(1, {})};
  std::vector<Graph> prev = all_connected_graphs(n - 1);
  std::set<uint64_t> seen;
  std::vector<Graph> out;
  for (const Graph& h : prev) {
    for (uint32_t nb = 1; nb < (1u << (n - 1)); ++nb) {
      std::vector<Edge> es = h.edges();
      for (int v = 0; v < n - 1; ++v)
        if ((nb >> v) & 1) es.emplace_back(v, n - 1);
      Graph g(n, es);
      uint64_t code = canonical_code(g);
      if (seen.insert(code).second) out.push_back(from_code(n, code));
    }
  }
  return out;
}

}  // namespace cbg
