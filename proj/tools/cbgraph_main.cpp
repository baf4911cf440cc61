// cbgraph: command-line front end for the convex-ball graph library.
// Exit codes: 0 = property holds / command succeeded, 1 = property fails
// (witness printed), 2 = usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "acceptance_suite.hpp"
#include "cbgraph/combing.hpp"
#include "cbgraph/conditions.hpp"
#include "cbgraph/convexity.hpp"
#include "cbgraph/cover.hpp"
#include "cbgraph/dismantle.hpp"
#include "cbgraph/generators.hpp"
#include "cbgraph/graph.hpp"
#include "cbgraph/helly.hpp"
#include "cbgraph/parallel.hpp"
#include "cbgraph/substructures.hpp"
#include "cbgraph/triangles.hpp"

namespace {

using namespace cbg;

// Line-oriented output; kv mode prints bare `key=value` for machine use.
struct Printer {
  bool kv = false;
  void pair(const std::string& k, const std::string& v) const {
    if (kv)
      std::cout << k << "=" << v << "\n";
    else
      std::cout << k << " = " << v << "\n";
  }
  void pair(const std::string& k, long long v) const {
    pair(k, std::to_string(v));
  }
  void pair(const std::string& k, int v) const { pair(k, std::to_string(v)); }
  void pair(const std::string& k, bool v) const {
    pair(k, std::string(v ? "true" : "false"));
  }
  void pair(const std::string& k, double v) const {
    std::ostringstream ss;
    ss << v;
    pair(k, ss.str());
  }
};

std::string join(const std::vector<Vertex>& vs) {
  std::ostringstream ss;
  for (size_t i = 0; i < vs.size(); ++i) ss << (i ? " " : "") << vs[i];
  return ss.str();
}

std::string join_set(const VertexSet& s) { return join(s.elements()); }

Graph load_graph(const std::string& path) {
  if (path == "-") return load_edge_list(std::cin).graph;
  return load_edge_list_file(path).graph;
}

void summary(const Printer& p, const Graph& g) {
  p.pair("n", g.n());
  p.pair("m", g.m());
  if (g.is_connected()) p.pair("diameter", DistanceOracle(g).diameter());
}

void write_graph(const Graph& g, const std::string& path) {
  if (path == "-") {
    write_edge_list(std::cout, g);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("IoError", "cannot write " + path);
  write_edge_list(out, g);
}

int cmd_gen(const Printer&, const std::string& family,
            const std::vector<int>& params, const std::string& out,
            const std::string& labels_out) {
  NamedGraph ng = make_family(family, params);
  write_graph(ng.graph, out);
  if (!labels_out.empty()) {
    std::ofstream lf(labels_out);
    if (!lf) throw Error("IoError", "cannot write " + labels_out);
    for (const auto& [name, id] : ng.labels) lf << name << " " << id << "\n";
  }
  return 0;
}

int cmd_check(const Printer& p, const std::string& input) {
  Graph g = load_graph(input);
  summary(p, g);
  ConvexityWitness direct = recognize_cb(g, RecognizeMethod::DIRECT);
  int agree = 0;
  for (RecognizeMethod m : all_methods()) {
    bool v = recognize_cb(g, m).verdict;
    p.pair("method_" + method_name(m), v);
    agree += v == direct.verdict;
  }
  p.pair("cb", direct.verdict);
  p.pair("method_agreement", std::to_string(agree) + "/6");
  if (!direct.verdict) {
    p.pair("witness_center", direct.center);
    p.pair("witness_radius", direct.radius);
    p.pair("witness_x", direct.x);
    p.pair("witness_y", direct.y);
    p.pair("witness_z", direct.z);
    p.pair("rerun", "cbgraph check " + input);
  }
  return direct.verdict && agree == 6 ? 0 : 1;
}

int cmd_conditions(const Printer& p, const std::string& input,
                   const std::string& which, int max_dist) {
  Graph g = load_graph(input);
  DistanceOracle d(g);
  summary(p, g);
  bool all_hold = true;
  for (ConditionId c : all_conditions()) {
    std::string name = condition_name(c);
    if (which != "all" && which != name) continue;
    ConditionWitness w = check_global(g, d, c, max_dist);
    p.pair("condition_" + name, w.holds);
    if (!w.holds) {
      all_hold = false;
      std::ostringstream ss;
      ss << "v=" << w.v << " x=" << w.x << " y=" << w.y << " u=" << w.u
         << " k=" << w.k;
      p.pair("witness_" + name, ss.str());
    }
  }
  return all_hold ? 0 : 1;
}

int cmd_substructures(const Printer& p, const std::string& input) {
  Graph g = load_graph(input);
  DistanceOracle d(g);
  summary(p, g);
  SubstructureReport rep = recognize_structural(g, d);
  std::ostringstream lens;
  for (size_t i = 0; i < rep.isometric_cycle_lengths.size(); ++i)
    lens << (i ? " " : "") << rep.isometric_cycle_lengths[i];
  p.pair("isometric_cycle_lengths", lens.str());
  p.pair("forbidden_count", (long long)rep.forbidden.size());
  for (size_t i = 0; i < rep.forbidden.size(); ++i)
    p.pair("forbidden_" + std::to_string(i),
           forbidden_name(rep.forbidden[i].kind) + ": " +
               join(rep.forbidden[i].vertices));
  return rep.forbidden.empty() ? 0 : 1;
}

int cmd_triangles(const Printer& p, const std::string& input) {
  Graph g = load_graph(input);
  DistanceOracle d(g);
  summary(p, g);
  auto ts = enumerate_metric_triangles(d);
  long long eq = 0, pent = 0, other = 0;
  std::string first_violation;
  for (const MetricTriangle& t : ts) {
    TriangleClass c = classify(g, d, t);
    if (c.kind == TriangleClass::STRONGLY_EQUILATERAL)
      ++eq;
    else if (c.kind == TriangleClass::PENTAGON_221)
      ++pent;
    else {
      if (!other)
        first_violation = "{" + std::to_string(t.u) + " " +
                          std::to_string(t.v) + " " + std::to_string(t.w) +
                          "}: " + c.violation;
      ++other;
    }
  }
  p.pair("metric_triangles", (long long)ts.size());
  p.pair("strongly_equilateral", eq);
  p.pair("pentagon_221", pent);
  p.pair("other", other);
  if (other) p.pair("first_violation", first_violation);
  return other == 0 ? 0 : 1;
}

int cmd_comb(const Printer& p, const std::string& input, Vertex u, Vertex v,
             bool enumerate) {
  Graph g = load_graph(input);
  DistanceOracle d(g);
  summary(p, g);
  CliquePath cp = clique_path(g, d, u, v);
  p.pair("k", cp.length());
  for (int i = 0; i <= cp.length(); ++i)
    p.pair("level_" + std::to_string(i), join_set(cp.cliques[i]));
  NormalAxiomReport rep = is_normal(g, d, cp);
  for (int a = 0; a < 4; ++a)
    p.pair("axiom_" + std::to_string(a + 1), rep.axiom[a]);
  p.pair("normal", rep.all());
  bool unique = true;
  if (enumerate) {
    auto all = enumerate_normal_paths(g, d, u, v);
    unique = all.size() == 1 && all[0].cliques == cp.cliques;
    p.pair("normal_paths", (long long)all.size());
    p.pair("unique", unique);
  }
  return rep.all() && unique ? 0 : 1;
}

int cmd_fellow(const Printer& p, const std::string& input,
               const std::string& family) {
  Graph g = load_graph(input);
  DistanceOracle d(g);
  summary(p, g);
  std::vector<Quadruple> quads;
  int bound = 0;
  bool ratio_mode = false;
  if (family == "all") {
    quads = all_quadruples(g);
    bound = 7;
    ratio_mode = true;
  } else if (family == "sinks") {
    quads = same_source_adjacent_sinks(g);
    bound = 3;
  } else if (family == "sources-strict") {
    quads = adjacent_sources_same_sink(g, d, true);
    bound = 1;
  } else if (family == "sources-equal") {
    quads = adjacent_sources_same_sink(g, d, false);
    bound = 4;
  } else {
    throw Error("BadParameters", "unknown family " + family);
  }
  FellowTravelerStats st = fellow_traveler_scan(g, d, quads);
  p.pair("family", family);
  p.pair("quadruples", (long long)quads.size());
  p.pair("max_level_distance", st.max_level_distance);
  p.pair("max_ratio", st.max_ratio);
  p.pair("bound", bound);
  std::ostringstream ss;
  ss << st.u << " " << st.u2 << " " << st.v << " " << st.v2;
  p.pair("extremal_quadruple", ss.str());
  bool within = ratio_mode ? st.max_ratio <= bound + 1e-9
                           : st.max_level_distance <= bound;
  p.pair("within_bound", within);
  return within ? 0 : 1;
}

int cmd_fftp(const Printer& p, const std::string& input,
             const std::vector<Vertex>& path) {
  Graph g = load_graph(input);
  DistanceOracle d(g);
  summary(p, g);
  p.pair("input_path", join(path));
  p.pair("input_length", (long long)path.size() - 1);
  std::vector<Vertex> s = fftp_shorten(g, d, path);
  p.pair("output_path", join(s));
  p.pair("output_length", (long long)s.size() - 1);
  int k = async_fellow_K(d, s, path);
  p.pair("async_k", k);
  return s.size() < path.size() && k <= 2 ? 0 : 1;
}

int cmd_dismantle(const Printer& p, const std::string& input, Vertex base,
                  unsigned long long seed, int power) {
  Graph g = load_graph(input);
  summary(p, g);
  BfsOrder o = bfs_order(g, base, seed);
  p.pair("order", join(o.order));
  p.pair("valid_bfs", is_valid_bfs_order(g, o));
  auto bad = verify_dismantling(g, o.order, power);
  p.pair("power", power);
  p.pair("dismantles", !bad.has_value());
  if (bad) p.pair("violator", *bad);
  return bad ? 1 : 0;
}

int cmd_core(const Printer& p, const std::string& input) {
  Graph g = load_graph(input);
  summary(p, g);
  VertexSet core = compute_core(g);
  p.pair("core", join_set(core));
  p.pair("core_size", core.size());
  return 0;
}

int cmd_stabilize(const Printer& p, const std::string& input, int rotation,
                  const std::string& perm_file) {
  Graph g = load_graph(input);
  DistanceOracle d(g);
  summary(p, g);
  Automorphism f(g.n());
  if (!perm_file.empty()) {
    std::ifstream in(perm_file);
    if (!in) throw Error("IoError", "cannot read " + perm_file);
    for (Vertex v = 0; v < g.n(); ++v)
      if (!(in >> f[v])) throw Error("BadParameters", "short permutation file");
  } else {
    for (Vertex v = 0; v < g.n(); ++v) f[v] = (v + rotation) % g.n();
  }
  try {
    VertexSet s = stabilized_convex_set(g, d, f);
    p.pair("set", join_set(s));
    p.pair("size", s.size());
    p.pair("set_diameter", d.set_diameter(s));
    return 0;
  } catch (const Error& e) {
    if (e.kind() == "NotFound") {
      p.pair("found", false);
      return 1;
    }
    throw;
  }
}

int cmd_helly(const Printer& p, const std::string& input, int cap) {
  Graph g = load_graph(input);
  DistanceOracle d(g);
  summary(p, g);
  HellyCertificate c = helly_number(d, cap);
  p.pair("h", c.h);
  p.pair("h2", c.h2);
  p.pair("capped", c.capped);
  p.pair("witness", join_set(c.witness));
  p.pair("witness2", join_set(c.witness2));
  return !c.capped && c.h == c.h2 ? 0 : 1;
}

int cmd_cover(const Printer& p, const std::string& input, int radius,
              Vertex base, const std::string& out, const std::string& map_out,
              int check_cb) {
  Graph g = load_graph(input);
  summary(p, g);
  CoverState st = build_universal_cover(g, base, radius);
  p.pair("cover_n", st.cover.n());
  p.pair("cover_m", st.cover.m());
  if (!out.empty()) write_graph(st.cover, out);
  if (!map_out.empty()) {
    std::ofstream mf(map_out);
    if (!mf) throw Error("IoError", "cannot write " + map_out);
    for (Vertex v = 0; v < st.cover.n(); ++v)
      mf << v << " " << st.image[v] << " " << st.height[v] << "\n";
  }
  CoverInvariantReport rep = verify_cover_invariants(g, st);
  p.pair("invariant_p", rep.p);
  p.pair("invariant_q", rep.q);
  p.pair("invariant_r", rep.r);
  p.pair("invariant_s", rep.s);
  p.pair("invariant_t", rep.t);
  if (!rep.all()) p.pair("invariant_detail", rep.detail);
  bool cb_ok = true;
  if (check_cb >= 0) {
    cb_ok = cover_is_cb_up_to(st, check_cb).verdict;
    p.pair("cb_up_to_" + std::to_string(check_cb), cb_ok);
  }
  return rep.all() && cb_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cbgraph: tools for graphs with convex balls"};
  app.require_subcommand(1);
  std::string format = "text";
  int threads = 0;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "kv"}));
  app.add_option("--threads", threads, "parallelism cap (0 = all cores)");

  // Shared argument storage; each subcommand binds the pieces it needs.
  std::string input = "-", family, out = "-", labels_out, map_out, perm_file;
  std::string condition = "all", quad_family = "all";
  std::vector<int> params;
  std::vector<Vertex> path;
  Vertex u = 0, v = 0, base = 0;
  unsigned long long seed = 0;
  int max_dist = -1, power = 2, cap = 8, radius = 0, rotation = 1;
  int check_cb = -1;
  bool enumerate = false;

  auto* gen = app.add_subcommand("gen", "generate a named graph");
  gen->add_option("family", family, "family name")->required();
  gen->add_option("params", params, "numeric parameters");
  gen->add_option("-o,--output", out, "edge-list output path ('-' = stdout)");
  gen->add_option("--labels-out", labels_out, "label sidecar output path");

  auto add_input = [&](CLI::App* c) {
    c->add_option("input", input, "edge-list path ('-' = stdin)")->required();
  };
  auto* check = app.add_subcommand("check", "run all recognizers");
  add_input(check);
  auto* conds = app.add_subcommand("conditions", "global local-condition scan");
  add_input(conds);
  conds->add_option("--condition", condition, "condition name or 'all'");
  conds->add_option("--max-dist", max_dist, "restrict loci to distance <= D");
  auto* subs = app.add_subcommand("substructures", "forbidden-pattern report");
  add_input(subs);
  auto* tris = app.add_subcommand("triangles", "metric triangle classification");
  add_input(tris);
  auto* comb = app.add_subcommand("comb", "clique path between two vertices");
  add_input(comb);
  comb->add_option("u", u, "source vertex")->required();
  comb->add_option("v", v, "sink vertex")->required();
  comb->add_flag("--enumerate", enumerate, "also run the uniqueness search");
  auto* fellow = app.add_subcommand("fellow", "fellow-traveler scan");
  add_input(fellow);
  fellow->add_option("--family", quad_family,
                     "all | sinks | sources-strict | sources-equal");
  auto* fftp = app.add_subcommand("fftp", "shorten a non-geodesic path");
  add_input(fftp);
  fftp->add_option("path", path, "vertex sequence")->expected(2, -1);
  auto* dis = app.add_subcommand("dismantle", "BFS order dismantling check");
  add_input(dis);
  dis->add_option("--base", base, "BFS base vertex");
  dis->add_option("--seed", seed, "neighbor-scan tiebreak seed");
  dis->add_option("--power", power, "graph power to dismantle");
  auto* core = app.add_subcommand("core", "iterated domination core");
  add_input(core);
  auto* stab = app.add_subcommand("stabilize", "stabilized convex set");
  add_input(stab);
  stab->add_option("--rotation", rotation, "cyclic automorphism i -> i+k");
  stab->add_option("--perm", perm_file, "permutation file (one image per line)");
  auto* helly = app.add_subcommand("helly", "Helly numbers h and h2");
  add_input(helly);
  helly->add_option("--cap", cap, "search cap");
  auto* cover = app.add_subcommand("cover", "bounded-radius universal cover");
  add_input(cover);
  cover->add_option("--radius", radius, "construction radius")->required();
  cover->add_option("--base", base, "base vertex in the input graph");
  cover->add_option("-o,--output", out, "cover edge-list output path")
      ->default_val("");
  cover->add_option("--map-out", map_out,
                    "sidecar: 'cover-vertex image-vertex height' per line");
  cover->add_option("--check-cb", check_cb,
                    "also verify ball convexity up to this radius");
  auto* corpus = app.add_subcommand("corpus", "run the full acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  cbg::set_thread_count(threads);
  Printer p{format == "kv"};
  try {
    if (*gen) return cmd_gen(p, family, params, out, labels_out);
    if (*check) return cmd_check(p, input);
    if (*conds) return cmd_conditions(p, input, condition, max_dist);
    if (*subs) return cmd_substructures(p, input);
    if (*tris) return cmd_triangles(p, input);
    if (*comb) return cmd_comb(p, input, u, v, enumerate);
    if (*fellow) return cmd_fellow(p, input, quad_family);
    if (*fftp) return cmd_fftp(p, input, path);
    if (*dis) return cmd_dismantle(p, input, base, seed, power);
    if (*core) return cmd_core(p, input);
    if (*stab) return cmd_stabilize(p, input, rotation, perm_file);
    if (*helly) return cmd_helly(p, input, cap);
    if (*cover)
      return cmd_cover(p, input, radius, base, out, map_out, check_cb);
    if (*corpus) return cbg::run_acceptance_suite(std::cout) == 0 ? 0 : 1;
  } catch (const cbg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
