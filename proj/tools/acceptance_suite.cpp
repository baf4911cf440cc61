#include "acceptance_suite.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cbgraph/combing.hpp"
#include "cbgraph/conditions.hpp"
#include "cbgraph/convexity.hpp"
#include "cbgraph/cover.hpp"
#include "cbgraph/dismantle.hpp"
#include "cbgraph/generators.hpp"
#include "cbgraph/graph.hpp"
#include "cbgraph/helly.hpp"
#include "cbgraph/substructures.hpp"
#include "cbgraph/triangles.hpp"

namespace cbg {
namespace {

constexpr uint64_t kRandomSeed = 20250823ull;

struct Entry {
  std::string name;
  Graph g;
  bool cb = false;  // definitional verdict, filled by criterion 1
};

// Named positives, named negatives, the exhaustive <=7-vertex catalog, and
// the seeded random sample, in one deterministic list.
std::vector<Entry> build_corpus() {
  std::vector<Entry> es;
  auto add = [&](const std::string& name, const Graph& g) {
    es.push_back({name, g, false});
  };
  add("petersen", make_petersen().graph);
  add("hoffman-singleton", make_hoffman_singleton().graph);
  add("c5", make_cycle(5).graph);
  add("circulant-9-1-2", make_circulant(9, {1, 2}).graph);
  add("ctreex", make_ctreex().graph);
  add("diameter3", make_diameter3().graph);
  for (int s = 2; s <= 5; ++s)
    add("chain-" + std::to_string(s), make_pentagon_chain(s).graph);
  add("pt", make_pt().graph);
  add("pp1", make_pp1().graph);
  add("c4", make_cycle(4).graph);
  add("c6", make_cycle(6).graph);
  add("c7", make_cycle(7).graph);
  add("c8", make_cycle(8).graph);
  for (int n = 1; n <= 7; ++n) {
    auto gs = all_connected_graphs(n);
    for (size_t i = 0; i < gs.size(); ++i)
      add("small" + std::to_string(n) + "-" + std::to_string(i), gs[i]);
  }
  auto rs = random_corpus(12, 500, kRandomSeed);
  for (size_t i = 0; i < rs.size(); ++i)
    add("rand-" + std::to_string(i), rs[i]);
  return es;
}

// ---- criterion 1: six-way recognizer equivalence + 2-convex <=> INC ----

bool crit1(std::vector<Entry>& es, std::string& detail) {
  bool ok = true;
  for (Entry& e : es) {
    bool direct = recognize_cb(e.g, RecognizeMethod::DIRECT).verdict;
    e.cb = direct;
    if (!ok) continue;  // keep filling verdicts, stop comparing after a miss
    for (RecognizeMethod m : all_methods()) {
      if (m == RecognizeMethod::DIRECT) continue;
      if (recognize_cb(e.g, m).verdict != direct) {
        ok = false;
        detail = e.name + ": " + method_name(m) + " disagrees with direct";
        break;
      }
    }
    DistanceOracle d(e.g);
    bool two = has_k_convex_balls(e.g, d, 2).verdict;
    bool inc = check_global(e.g, d, ConditionId::INC).holds;
    bool incp = check_global(e.g, d, ConditionId::INCPLUS).holds;
    if (ok && (two != inc || inc != incp)) {
      ok = false;
      detail = e.name + ": 2-convex/INC/INC+ mismatch";
    }
  }
  if (ok) detail = std::to_string(es.size()) + " graphs";
  return ok;
}

// ---- criterion 2: named verdicts with witnesses ----

bool crit2(const std::vector<Entry>& es, std::string& detail) {
  for (const Entry& e : es) {
    if (e.name.rfind("small", 0) == 0 || e.name.rfind("rand-", 0) == 0) continue;
    bool expect = !(e.name == "pt" || e.name == "pp1" || e.name == "c4" ||
                    e.name == "c6" || e.name == "c7" || e.name == "c8");
    ConvexityWitness w = recognize_cb(e.g, RecognizeMethod::DIRECT);
    if (w.verdict != expect) {
      detail = e.name + ": unexpected verdict";
      return false;
    }
    if (!expect && (w.center < 0 || w.x < 0 || w.y < 0 || w.z < 0)) {
      detail = e.name + ": negative verdict lacks a witness";
      return false;
    }
  }
  detail = "14 named graphs";
  return true;
}

// ---- criterion 3: BFS orders dismantle G^2, G^3, G^4 ----

bool crit3(const std::vector<Entry>& es, std::string& detail) {
  const unsigned long long seeds[3] = {0, 0xC0FFEEull, 0xFEEDull};
  long long checked = 0;
  for (const Entry& e : es) {
    if (!e.cb) continue;
    std::vector<Vertex> bases;
    if (e.g.n() <= 12)
      for (Vertex b = 0; b < e.g.n(); ++b) bases.push_back(b);
    else
      for (int i = 0; i < 10; ++i) bases.push_back(Vertex(i * e.g.n() / 10));
    for (Vertex b : bases)
      for (unsigned long long seed : seeds) {
        BfsOrder o = bfs_order(e.g, b, seed);
        if (!is_valid_bfs_order(e.g, o)) {
          detail = e.name + ": invalid BFS order from base " + std::to_string(b);
          return false;
        }
        for (int p = 2; p <= 4; ++p) {
          auto bad = verify_dismantling(e.g, o.order, p);
          ++checked;
          if (bad) {
            detail = e.name + ": base " + std::to_string(b) + " power " +
                     std::to_string(p) + " stuck at " + std::to_string(*bad);
            return false;
          }
        }
      }
  }
  detail = std::to_string(checked) + " (graph,base,seed,power) checks";
  return true;
}

// ---- criterion 4: normality, uniqueness, fellow-traveler bounds ----

struct PathCache {
  int n = 0;
  // levels[u*n+v][i] = members of level i of the clique path u -> v
  std::vector<std::vector<std::vector<Vertex>>> levels;
  int len(Vertex u, Vertex v) const { return (int)levels[u * n + v].size() - 1; }
  const std::vector<Vertex>& level(Vertex u, Vertex v, int i) const {
    const auto& l = levels[u * n + v];
    return l[i >= (int)l.size() ? l.size() - 1 : i];
  }
};

PathCache cache_paths(const Graph& g, const DistanceOracle& d) {
  PathCache pc;
  pc.n = g.n();
  pc.levels.resize((size_t)g.n() * g.n());
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = 0; v < g.n(); ++v) {
      CliquePath p = clique_path(g, d, u, v);
      auto& out = pc.levels[u * g.n() + v];
      out.reserve(p.cliques.size());
      for (const VertexSet& c : p.cliques) out.push_back(c.elements());
    }
  return pc;
}

int level_dist(const DistanceOracle& d, const PathCache& pc, Vertex u, Vertex v,
               Vertex u2, Vertex v2) {
  int k = std::max(pc.len(u, v), pc.len(u2, v2));
  int best = 0;
  for (int i = 0; i <= k; ++i)
    for (Vertex x : pc.level(u, v, i))
      for (Vertex y : pc.level(u2, v2, i))
        best = std::max(best, d.dist(x, y));
  return best;
}

bool crit4(const std::vector<Entry>& es, std::string& detail) {
  long long pairs_checked = 0, quads_checked = 0;
  for (const Entry& e : es) {
    if (!e.cb) continue;
    DistanceOracle d(e.g);
    int n = e.g.n();
    if (n <= 10) {
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
          if (u == v) continue;
          CliquePath p = clique_path(e.g, d, u, v);
          if (!is_normal(e.g, d, p).all()) {
            detail = e.name + ": clique path " + std::to_string(u) + "->" +
                     std::to_string(v) + " not normal";
            return false;
          }
          auto all = enumerate_normal_paths(e.g, d, u, v);
          if (all.size() != 1 || all[0].cliques != p.cliques) {
            detail = e.name + ": normal path " + std::to_string(u) + "->" +
                     std::to_string(v) + " not unique (" +
                     std::to_string(all.size()) + " found)";
            return false;
          }
          ++pairs_checked;
        }
    }
    PathCache pc = cache_paths(e.g, d);
    // bound 7 over all quadruples, ratio against endpoint displacement
    for (Vertex u = 0; u < n; ++u)
      for (Vertex u2 = 0; u2 < n; ++u2)
        for (Vertex v = 0; v < n; ++v)
          for (Vertex v2 = 0; v2 < n; ++v2) {
            int denom = std::max(d.dist(u, u2), d.dist(v, v2));
            if (denom == 0) continue;
            ++quads_checked;
            if (level_dist(d, pc, u, v, u2, v2) > 7 * denom) {
              detail = e.name + ": ratio bound 7 violated";
              return false;
            }
          }
    // bound 3: same source, adjacent sinks
    for (Vertex u = 0; u < n; ++u)
      for (auto [v, v2] : e.g.edges())
        if (level_dist(d, pc, u, v, u, v2) > 3) {
          detail = e.name + ": same-source bound 3 violated";
          return false;
        }
    // bounds 1 and 4: adjacent sources, common sink
    for (auto [u, u2] : e.g.edges())
      for (Vertex v = 0; v < n; ++v) {
        int du = d.dist(u, v), du2 = d.dist(u2, v);
        int bound = du == du2 ? 4 : 1;
        Vertex far_u = du >= du2 ? u : u2, near_u = du >= du2 ? u2 : u;
        if (level_dist(d, pc, far_u, v, near_u, v) > bound) {
          detail = e.name + ": common-sink bound " + std::to_string(bound) +
                   " violated";
          return false;
        }
      }
  }
  detail = std::to_string(pairs_checked) + " pairs, " +
           std::to_string(quads_checked) + " quadruples";
  return true;
}

// ---- criterion 5: shorten every short non-geodesic path, K <= 2 ----

bool crit5(const std::vector<Entry>& es, std::string& detail) {
  long long shortened = 0;
  for (const Entry& e : es) {
    if (!e.cb || e.g.n() > 10) continue;
    DistanceOracle d(e.g);
    bool bad = false;
    std::vector<Vertex> stack;
    std::vector<char> used(e.g.n(), 0);
    std::function<void()> rec = [&]() {
      if (bad) return;
      if (stack.size() >= 3 &&
          (int)stack.size() - 1 > d.dist(stack.front(), stack.back())) {
        std::vector<Vertex> s = fftp_shorten(e.g, d, stack);
        bool valid = s.size() >= 2 && s.size() < stack.size() &&
                     s.front() == stack.front() && s.back() == stack.back();
        for (size_t i = 0; valid && i + 1 < s.size(); ++i)
          valid = e.g.adjacent(s[i], s[i + 1]);
        if (!valid || async_fellow_K(d, s, stack) > 2) {
          bad = true;
          detail = e.name + ": shortening failed for a path from " +
                   std::to_string(stack.front()) + " to " +
                   std::to_string(stack.back());
          return;
        }
        ++shortened;
      }
      if ((int)stack.size() == 7) return;
      for (Vertex w : e.g.neighbors(stack.back())) {
        if (used[w]) continue;
        used[w] = 1;
        stack.push_back(w);
        rec();
        stack.pop_back();
        used[w] = 0;
      }
    };
    for (Vertex s0 = 0; s0 < e.g.n() && !bad; ++s0) {
      used[s0] = 1;
      stack = {s0};
      rec();
      used[s0] = 0;
    }
    if (bad) return false;
  }
  detail = std::to_string(shortened) + " non-geodesic paths shortened";
  return true;
}

// ---- criterion 6: metric triangle classification ----

bool crit6(const std::vector<Entry>& es, std::string& detail) {
  long long classified = 0;
  for (const Entry& e : es) {
    if (!e.cb) continue;
    DistanceOracle d(e.g);
    for (const MetricTriangle& t : enumerate_metric_triangles(d)) {
      auto [a, b, c] = t.sides;
      if ((a >= 2 && b == a - 1 && c == a - 1) ||
          (a >= 3 && b == a && c == a - 1)) {
        detail = e.name + ": forbidden side type (" + std::to_string(a) + "," +
                 std::to_string(b) + "," + std::to_string(c) + ")";
        return false;
      }
      TriangleClass tc = classify(e.g, d, t);
      if (tc.kind == TriangleClass::OTHER) {
        detail = e.name + ": unclassified metric triangle {" +
                 std::to_string(t.u) + "," + std::to_string(t.v) + "," +
                 std::to_string(t.w) + "}: " + tc.violation;
        return false;
      }
      ++classified;
    }
  }
  detail = std::to_string(classified) + " metric triangles";
  return true;
}

// ---- criterion 7: h = h2 and the constructive reduction ----

bool crit7(const std::vector<Entry>& es, std::string& detail) {
  long long reduced = 0;
  for (const Entry& e : es) {
    if (!e.cb || e.g.n() > 10) continue;
    DistanceOracle d(e.g);
    // cap = n keeps the search exact: h-independent sets are vertex subsets
    HellyCertificate cert = helly_number(d, std::max(2, e.g.n()));
    if (cert.h != cert.h2) {
      detail = e.name + ": h=" + std::to_string(cert.h) +
               " h2=" + std::to_string(cert.h2) +
               (cert.capped ? " (capped)" : "");
      return false;
    }
    if (e.name == "petersen" && cert.h != 4) {
      detail = "petersen: h=" + std::to_string(cert.h) + ", expected 4";
      return false;
    }
    int n = e.g.n();
    std::vector<char> hind(size_t(1) << n, 0);
    auto set_of = [&](unsigned mask) {
      VertexSet s(n);
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1) s.add(v);
      return s;
    };
    for (unsigned m = 1; m < (1u << n); ++m)
      hind[m] = is_h_independent(d, set_of(m));
    for (unsigned m = 1; m < (1u << n); ++m) {
      if (!hind[m]) continue;
      bool maximal = true;
      for (int v = 0; v < n && maximal; ++v)
        if (!(m >> v & 1) && hind[m | (1u << v)]) maximal = false;
      if (!maximal) continue;
      VertexSet a = set_of(m), r = reduce_h_independent(e.g, d, a);
      if (r.size() != a.size() || d.set_diameter(r) > 2 ||
          !is_h_independent(d, r)) {
        detail = e.name + ": reduction failed on a maximal set of size " +
                 std::to_string(a.size());
        return false;
      }
      ++reduced;
    }
  }
  detail = std::to_string(reduced) + " maximal sets reduced";
  return true;
}

// ---- criterion 8: covers ----

bool reproduces(const Graph& g, const CoverState& st) {
  if (st.cover.n() != g.n()) return false;
  std::vector<char> hit(g.n(), 0);
  for (Vertex v = 0; v < st.cover.n(); ++v) {
    if (hit[st.image[v]]) return false;
    hit[st.image[v]] = 1;
  }
  for (Vertex a = 0; a < st.cover.n(); ++a)
    for (Vertex b = a + 1; b < st.cover.n(); ++b)
      if (st.cover.adjacent(a, b) != g.adjacent(st.image[a], st.image[b]))
        return false;
  return true;
}

// Fundamental cycles of a BFS tree, as closed vertex walks.
std::vector<std::vector<Vertex>> fundamental_cycles(const Graph& g) {
  BfsOrder o = bfs_order(g, 0);
  auto chain = [&](Vertex x) {
    std::vector<Vertex> c{x};
    while (o.parent[x] != x) {
      x = o.parent[x];
      c.push_back(x);
    }
    return c;
  };
  std::vector<std::vector<Vertex>> out;
  for (auto [a, b] : g.edges()) {
    if (o.parent[a] == b || o.parent[b] == a) continue;
    auto ca = chain(a), cb = chain(b);
    while (ca.size() > 1 && cb.size() > 1 &&
           ca[ca.size() - 2] == cb[cb.size() - 2]) {
      ca.pop_back();
      cb.pop_back();
    }
    std::vector<Vertex> cyc = ca;  // a .. lca
    for (int i = (int)cb.size() - 2; i >= 0; --i) cyc.push_back(cb[i]);
    out.push_back(cyc);  // closed by the non-tree edge b-a
  }
  return out;
}

bool crit8(const std::vector<Entry>& es, std::string& detail) {
  const Graph petersen = make_petersen().graph;
  CoverState ps = build_universal_cover(petersen, 0, 3);
  if (!reproduces(petersen, ps)) {
    detail = "petersen cover at R=3 is not petersen";
    return false;
  }
  if (!verify_cover_invariants(petersen, ps).all()) {
    detail = "petersen cover invariants fail";
    return false;
  }
  const Graph c13 = make_cycle(13).graph;
  CoverState cs = build_universal_cover(c13, 0, 6);
  int maxdeg = 0;
  for (Vertex v = 0; v < cs.cover.n(); ++v)
    maxdeg = std::max(maxdeg, cs.cover.degree(v));
  if (cs.cover.n() != 13 || cs.cover.m() != 12 || maxdeg > 2 ||
      !cs.cover.is_connected()) {
    detail = "c13 cover at R=6 is not the 13-vertex path";
    return false;
  }
  CoverInvariantReport rep = verify_cover_invariants(c13, cs);
  if (!rep.all()) {
    detail = "c13 cover invariants fail: " + rep.detail;
    return false;
  }
  if (!cover_is_cb_up_to(cs, 3).verdict) {
    detail = "c13 cover fails ball convexity up to radius 3";
    return false;
  }
  long long covered = 0;
  for (const Entry& e : es) {
    if (!e.cb || e.g.n() == 1) {
      covered += e.cb && e.g.n() == 1;
      continue;
    }
    DistanceOracle d(e.g);
    if (h1_rank_gf2(build_complex(e.g)) != 0) continue;
    bool simply = true;
    for (const auto& cyc : fundamental_cycles(e.g))
      if (contract_cycle(e.g, d, cyc, 0).kind != ContractionResult::CONSTANT) {
        simply = false;
        break;
      }
    if (!simply) continue;
    CoverState st = build_universal_cover(e.g, 0, d.diameter());
    if (!reproduces(e.g, st)) {
      detail = e.name + ": cover at R=diameter does not reproduce the graph";
      return false;
    }
    ++covered;
  }
  detail = std::to_string(covered) + " simply-connected graphs reproduced";
  return true;
}

// ---- criterion 9: quadrangle condition fails in G_k^k ----

bool crit9(std::string& detail) {
  for (int k = 2; k <= 4; ++k) {
    NamedGraph ng = make_gk(k);
    Graph gp = power_graph(ng.graph, k);
    DistanceOracle d(gp);
    if (check_qc(gp, d, ng.labels.at("v"), ng.labels.at("x"),
                 ng.labels.at("y"), ng.labels.at("u"))) {
      detail = "gk k=" + std::to_string(k) + ": quadrangle condition holds";
      return false;
    }
  }
  detail = "k in {2,3,4}";
  return true;
}

// ---- criterion 10: rotation of circulant(9,{1,2}) ----

bool crit10(std::string& detail) {
  Graph g = make_circulant(9, {1, 2}).graph;
  DistanceOracle d(g);
  Automorphism f(9);
  for (Vertex v = 0; v < 9; ++v) f[v] = (v + 1) % 9;
  auto invariant = [&](const VertexSet& s) {
    for (Vertex v : s.elements())
      if (!s.contains(f[v])) return false;
    return true;
  };
  for (unsigned m = 1; m < (1u << 9); ++m) {
    VertexSet s(9);
    for (int v = 0; v < 9; ++v)
      if (m >> v & 1) s.add(v);
    auto mem = s.elements();
    bool clique = true;
    for (size_t i = 0; i < mem.size() && clique; ++i)
      for (size_t j = i + 1; j < mem.size() && clique; ++j)
        clique = g.adjacent(mem[i], mem[j]);
    if (clique && invariant(s)) {
      detail = "a stabilized clique exists";
      return false;
    }
  }
  for (const Pentagon& p : enumerate_pentagons(g)) {
    VertexSet s(9);
    for (Vertex v : p) s.add(v);
    if (invariant(s)) {
      detail = "a stabilized pentagon exists";
      return false;
    }
  }
  VertexSet s = stabilized_convex_set(g, d, f);
  if (s.empty() || !invariant(s) || d.set_diameter(s) > 2 ||
      !is_convex(d, s).verdict) {
    detail = "stabilized convex set invalid";
    return false;
  }
  detail = "stabilized set of size " + std::to_string(s.size());
  return true;
}

}  // namespace

int run_acceptance_suite(std::ostream& out) {
  std::vector<Entry> es = build_corpus();
  struct Item {
    const char* title;
    std::function<bool(std::string&)> run;
  };
  std::vector<Item> items = {
      {"recognizer-equivalence", [&](std::string& s) { return crit1(es, s); }},
      {"named-verdicts", [&](std::string& s) { return crit2(es, s); }},
      {"bfs-dismantles-powers", [&](std::string& s) { return crit3(es, s); }},
      {"bicombing-normal-unique-fellow",
       [&](std::string& s) { return crit4(es, s); }},
      {"fftp-shortening", [&](std::string& s) { return crit5(es, s); }},
      {"metric-triangles", [&](std::string& s) { return crit6(es, s); }},
      {"helly-numbers", [&](std::string& s) { return crit7(es, s); }},
      {"universal-covers", [&](std::string& s) { return crit8(es, s); }},
      {"power-quadrangle-failure", [&](std::string& s) { return crit9(s); }},
      {"stabilized-sets", [&](std::string& s) { return crit10(s); }},
  };
  int failures = 0;
  for (size_t i = 0; i < items.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = items[i].run(detail);
    } catch (const Error& err) {
      detail = std::string("error: ") + err.what();
    }
    if (!ok) ++failures;
    out << "criterion " << (i + 1) << " " << items[i].title << ": "
        << (ok ? "PASS" : "FAIL") << " (" << detail << ")\n";
    out.flush();
  }
  return failures;
}

}  // namespace cbg
