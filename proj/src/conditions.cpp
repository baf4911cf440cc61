#include "cbgraph/conditions.hpp"

#include "cbgraph/substructures.hpp"

namespace cbg {

std::string condition_name(ConditionId c) {
  switch (c) {
    case ConditionId::TC: return "TC";
    case ConditionId::QC: return "QC";
    case ConditionId::PC0: return "PC0";
    case ConditionId::PC1: return "PC1";
    case ConditionId::PC2: return "PC2";
    case ConditionId::PCPLUS: return "PC+";
    case ConditionId::INC0: return "INC0";
    case ConditionId::INC: return "INC";
    case ConditionId::INCPLUS: return "INC+";
    case ConditionId::TPC0: return "TPC0";
    case ConditionId::TPC1: return "TPC1";
    case ConditionId::TPC2: return "TPC2";
    case ConditionId::TPCPLUS: return "TPC+";
  }
  return "?";
}

std::vector<ConditionId> all_conditions() {
  return {ConditionId::TC,   ConditionId::QC,      ConditionId::PC0,
          ConditionId::PC1,  ConditionId::PC2,     ConditionId::PCPLUS,
          ConditionId::INC0, ConditionId::INC,     ConditionId::INCPLUS,
          ConditionId::TPC0, ConditionId::TPC1,    ConditionId::TPC2,
          ConditionId::TPCPLUS};
}

bool check_tc(const Graph& g, const DistanceOracle& d, Vertex v, Vertex x, Vertex y) {
  int k = d.dist(v, x);
  if (k < 1 || d.dist(v, y) != k || !g.adjacent(x, y))
    throw Error("PreconditionViolated", "TC locus needs equidistant adjacent x,y");
  for (Vertex z = 0; z < g.n(); ++z)
    if (d.dist(v, z) <= k - 1 && g.adjacent(z, x) && g.adjacent(z, y)) return true;
  return false;
}

bool check_qc(const Graph& g, const DistanceOracle& d, Vertex v, Vertex x,
              Vertex y, Vertex u) {
  int k = d.dist(v, x);
  if (d.dist(v, y) != k || d.dist(v, u) != k + 1 || !g.adjacent(u, x) ||
      !g.adjacent(u, y) || g.adjacent(x, y))
    throw Error("PreconditionViolated", "QC locus shape violated");
  for (Vertex z = 0; z < g.n(); ++z)
    if (d.dist(v, z) <= k - 1 && g.adjacent(z, x) && g.adjacent(z, y) &&
        !g.adjacent(z, u))
      return true;
  return false;
}

namespace {

// Is x-w-z-w'-y an induced 5-cycle (with the closing edge y-x)?
bool is_pentagon(const Graph& g, Vertex x, Vertex w, Vertex z, Vertex wp, Vertex y) {
  Vertex c[5] = {x, w, z, wp, y};
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      if (c[i] == c[j]) return false;
      bool cyc = (j == i + 1) || (i == 0 && j == 4);
      if (g.adjacent(c[i], c[j]) != cyc) return false;
    }
  return true;
}

}  // namespace

bool check_pc(const Graph& g, const DistanceOracle& d, PcVariant variant,
              Vertex v, Vertex x, Vertex y) {
  int k = d.dist(v, x);
  if (k < 2 || d.dist(v, y) != k || !g.adjacent(x, y))
    throw Error("PreconditionViolated", "PC locus needs k >= 2 and x ~ y");

  if (variant == PcVariant::PC2) {
    // B_2(x) and B_2(y) must meet B_{k-2}(v) in the same set.
    for (Vertex z = 0; z < g.n(); ++z)
      if (d.dist(v, z) <= k - 2 && (d.dist(x, z) <= 2) != (d.dist(y, z) <= 2))
        return false;
    return true;
  }

  auto low_nbrs = [&](Vertex a) {  // neighbors of a in I(a,v)
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(a))
      if (d.dist(v, w) == k - 1) out.push_back(w);
    return out;
  };
  std::vector<Vertex> ws = low_nbrs(x), wps = low_nbrs(y);

  if (variant == PcVariant::PC0) {
    for (Vertex z = 0; z < g.n(); ++z) {
      if (d.dist(v, z) > k - 2) continue;
      for (Vertex w : ws)
        for (Vertex wp : wps)
          if (is_pentagon(g, x, w, z, wp, y)) return true;
    }
    return false;
  }
  if (variant == PcVariant::PC1) {
    for (Vertex w : ws) {
      bool ok = false;
      for (Vertex z = 0; z < g.n() && !ok; ++z) {
        if (d.dist(v, z) > k - 2) continue;
        for (Vertex wp : wps)
          if (is_pentagon(g, x, w, z, wp, y)) {
            ok = true;
            break;
          }
      }
      if (!ok) return false;
    }
    return true;
  }
  // PC+: one (z, w') must serve every w.
  for (Vertex z = 0; z < g.n(); ++z) {
    if (d.dist(v, z) > k - 2) continue;
    for (Vertex wp : wps) {
      bool all = true;
      for (Vertex w : ws)
        if (!is_pentagon(g, x, w, z, wp, y)) {
          all = false;
          break;
        }
      if (all) return true;
    }
  }
  return false;
}

bool check_inc(const Graph& g, const DistanceOracle& d, IncVariant variant,
               Vertex u, Vertex v) {
  if (u == v) throw Error("PreconditionViolated", "INC needs u != v");
  int k = d.dist(u, v);
  std::vector<Vertex> c;  // S_1(u) ∩ I(u,v)
  for (Vertex w : g.neighbors(u))
    if (d.dist(w, v) == k - 1) c.push_back(w);
  // INC0: those neighbors form a clique.
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = i + 1; j < c.size(); ++j)
      if (!g.adjacent(c[i], c[j])) return false;
  if (variant == IncVariant::INC0) return true;

  if (variant == IncVariant::INC) {
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = i + 1; j < c.size(); ++j) {
        Vertex w = c[i], wp = c[j];
        bool ok = false;
        for (Vertex z = 0; z < g.n(); ++z)
          if (g.adjacent(z, w) && g.adjacent(z, wp) &&
              d.on_geodesic(w, z, v) && d.on_geodesic(wp, z, v)) {
            ok = true;
            break;
          }
        if (!ok) return false;
      }
    return true;
  }
  // INC+: a single vertex of I(u,v) at distance k-2 from v adjacent to the
  // whole clique (only demanded when k >= 2).
  if (k < 2) return true;
  for (Vertex z = 0; z < g.n(); ++z) {
    if (d.dist(v, z) != k - 2 || !d.on_geodesic(u, z, v)) continue;
    bool all = true;
    for (Vertex w : c)
      if (!g.adjacent(z, w)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

bool check_tpc(const Graph& g, const DistanceOracle& d, PcVariant variant,
               Vertex v, Vertex x, Vertex y) {
  if (check_tc(g, d, v, x, y)) return true;
  if (d.dist(v, x) < 2) return false;  // TC is the only option at k=1
  return check_pc(g, d, variant, v, x, y);
}

namespace {

ConditionWitness fail_at(ConditionId c, Vertex v, Vertex x, Vertex y, Vertex u, int k) {
  ConditionWitness w;
  w.condition = c;
  w.holds = false;
  w.v = v;
  w.x = x;
  w.y = y;
  w.u = u;
  w.k = k;
  return w;
}

}  // namespace

ConditionWitness check_global(const Graph& g, const DistanceOracle& d,
                              ConditionId c, int max_dist) {
  ConditionWitness ok;
  ok.condition = c;
  auto within = [&](int k) { return max_dist < 0 || k <= max_dist; };

  switch (c) {
    case ConditionId::INC0:
    case ConditionId::INC:
    case ConditionId::INCPLUS: {
      IncVariant var = c == ConditionId::INC0    ? IncVariant::INC0
                       : c == ConditionId::INC   ? IncVariant::INC
                                                 : IncVariant::INCPLUS;
      for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = 0; v < g.n(); ++v) {
          if (u == v || !within(d.dist(u, v))) continue;
          if (!check_inc(g, d, var, u, v))
            return fail_at(c, v, -1, -1, u, d.dist(u, v));
        }
      return ok;
    }
    case ConditionId::QC: {
      for (Vertex v = 0; v < g.n(); ++v)
        for (Vertex x = 0; x < g.n(); ++x)
          for (Vertex y = x + 1; y < g.n(); ++y) {
            if (g.adjacent(x, y)) continue;
            int k = d.dist(v, x);
            if (k < 1 || d.dist(v, y) != k || !within(k + 1)) continue;
            for (Vertex u = 0; u < g.n(); ++u) {
              if (d.dist(v, u) != k + 1 || !g.adjacent(u, x) || !g.adjacent(u, y))
                continue;
              if (!check_qc(g, d, v, x, y, u)) return fail_at(c, v, x, y, u, k);
            }
          }
      return ok;
    }
    default: {  // TC / PC^i / TPC^i over edge loci at uniform distance
      for (Vertex v = 0; v < g.n(); ++v)
        for (auto [x, y] : g.edges()) {
          int k = d.dist(v, x);
          if (k != d.dist(v, y) || k < 1 || !within(k)) continue;
          bool bare_pc = c == ConditionId::PC0 || c == ConditionId::PC1 ||
                         c == ConditionId::PC2 || c == ConditionId::PCPLUS;
          if (bare_pc && k < 2) continue;  // pentagon loci start at k = 2
          bool holds = true;
          switch (c) {
            case ConditionId::TC: holds = check_tc(g, d, v, x, y); break;
            case ConditionId::PC0:
              holds = check_pc(g, d, PcVariant::PC0, v, x, y);
              break;
            case ConditionId::PC1:
              holds = check_pc(g, d, PcVariant::PC1, v, x, y);
              break;
            case ConditionId::PC2:
              holds = check_pc(g, d, PcVariant::PC2, v, x, y);
              break;
            case ConditionId::PCPLUS:
              holds = check_pc(g, d, PcVariant::PCPLUS, v, x, y);
              break;
            case ConditionId::TPC0: holds = check_tpc(g, d, PcVariant::PC0, v, x, y); break;
            case ConditionId::TPC1: holds = check_tpc(g, d, PcVariant::PC1, v, x, y); break;
            case ConditionId::TPC2: holds = check_tpc(g, d, PcVariant::PC2, v, x, y); break;
            case ConditionId::TPCPLUS:
              holds = check_tpc(g, d, PcVariant::PCPLUS, v, x, y);
              break;
            default: break;
          }
          if (!holds) return fail_at(c, v, x, y, -1, k);
        }
      return ok;
    }
  }
}

std::vector<ConditionWitness> global_report(const Graph& g,
                                            const DistanceOracle& d,
                                            int max_dist) {
  std::vector<ConditionWitness> out;
  for (ConditionId c : all_conditions())
    out.push_back(check_global(g, d, c, max_dist));
  return out;
}

std::vector<RecognizeMethod> all_methods() {
  return {RecognizeMethod::DIRECT,    RecognizeMethod::INC_TPC0,
          RecognizeMethod::INC_TPC1,  RecognizeMethod::INC_TPC2,
          RecognizeMethod::INCP_TPCP, RecognizeMethod::STRUCTURAL};
}

std::string method_name(RecognizeMethod m) {
  switch (m) {
    case RecognizeMethod::DIRECT: return "direct";
    case RecognizeMethod::INC_TPC0: return "inc+tpc0";
    case RecognizeMethod::INC_TPC1: return "inc+tpc1";
    case RecognizeMethod::INC_TPC2: return "inc+tpc2";
    case RecognizeMethod::INCP_TPCP: return "inc+/tpc+";
    case RecognizeMethod::STRUCTURAL: return "structural";
  }
  return "?";
}

ConvexityWitness recognize_cb(const Graph& g, RecognizeMethod method) {
  if (!g.is_connected())
    throw Error("DisconnectedGraph", "recognizer needs a connected graph");
  DistanceOracle d(g);
  auto verdict_only = [](bool ok) {
    ConvexityWitness w;
    w.verdict = ok;
    return w;
  };
  switch (method) {
    case RecognizeMethod::DIRECT:
      return has_convex_balls(g, d);
    case RecognizeMethod::INC_TPC0:
      return verdict_only(check_global(g, d, ConditionId::INC).holds &&
                          check_global(g, d, ConditionId::TPC0).holds);
    case RecognizeMethod::INC_TPC1:
      return verdict_only(check_global(g, d, ConditionId::INC).holds &&
                          check_global(g, d, ConditionId::TPC1).holds);
    case RecognizeMethod::INC_TPC2:
      return verdict_only(check_global(g, d, ConditionId::INC).holds &&
                          check_global(g, d, ConditionId::TPC2).holds);
    case RecognizeMethod::INCP_TPCP:
      return verdict_only(check_global(g, d, ConditionId::INCPLUS).holds &&
                          check_global(g, d, ConditionId::TPCPLUS).holds);
    case RecognizeMethod::STRUCTURAL:
      return verdict_only(recognize_structural(g, d).forbidden.empty());
  }
  throw Error("BadParameters", "unknown method");
}

}  // namespace cbg
