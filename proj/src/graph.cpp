#include "cbgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>

namespace cbg {

int VertexSet::size() const {
  int c = 0;
  for (uint64_t x : w_) c += std::popcount(x);
  return c;
}

bool VertexSet::empty() const {
  for (uint64_t x : w_)
    if (x) return false;
  return true;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & o.w_[i]) return true;
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}
VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}
VertexSet& VertexSet::operator-=(const VertexSet& o) {
  for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  return *this;
}

std::vector<Vertex> VertexSet::elements() const {
  std::vector<Vertex> out;
  for (size_t i = 0; i < w_.size(); ++i) {
    uint64_t x = w_[i];
    while (x) {
      int b = std::countr_zero(x);
      out.push_back((Vertex)(i * 64 + b));
      x &= x - 1;
    }
  }
  return out;
}

Vertex VertexSet::first() const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i]) return (Vertex)(i * 64 + std::countr_zero(w_[i]));
  return -1;
}

bool VertexSet::lex_less(const VertexSet& o) const {
  auto a = elements(), b = o.elements();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : n_(n), adj_(n), rows_(n, VertexSet(n)) {
  if (n < 0) throw Error("BadParameters", "negative vertex count");
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error("BadParameters", "edge endpoint out of range");
    if (u == v) throw Error("BadParameters", "loop edge rejected");
    if (rows_[u].contains(v)) continue;  // merge duplicates
    rows_[u].add(v);
    rows_[v].add(u);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++m_;
  }
  for (auto& l : adj_) std::sort(l.begin(), l.end());
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  std::vector<char> seen(n_, 0);
  std::deque<Vertex> q{0};
  seen[0] = 1;
  int cnt = 1;
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop_front();
    for (Vertex v : adj_[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++cnt;
        q.push_back(v);
      }
  }
  return cnt == n_;
}

Graph Graph::induced(const VertexSet& s, std::vector<Vertex>* back) const {
  std::vector<Vertex> ids = s.elements();
  std::vector<int> pos(n_, -1);
  for (size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = (int)i;
  std::vector<std::pair<Vertex, Vertex>> es;
  for (Vertex u : ids)
    for (Vertex v : adj_[u])
      if (u < v && pos[v] >= 0) es.emplace_back(pos[u], pos[v]);
  if (back) *back = ids;
  return Graph((int)ids.size(), es);
}

DistanceOracle::DistanceOracle(const Graph& g) : n_(g.n()) {
  d_.assign((size_t)n_ * n_, -1);
  std::vector<Vertex> q(n_);
  for (Vertex s = 0; s < n_; ++s) {
    int16_t* row = &d_[(size_t)s * n_];
    int head = 0, tail = 0;
    row[s] = 0;
    q[tail++] = s;
    while (head < tail) {
      Vertex u = q[head++];
      for (Vertex v : g.neighbors(u))
        if (row[v] < 0) {
          row[v] = (int16_t)(row[u] + 1);
          q[tail++] = v;
        }
    }
    if (tail != n_) throw Error("DisconnectedGraph", "graph is not connected");
  }
}

int DistanceOracle::eccentricity(Vertex v) const {
  int e = 0;
  for (Vertex u = 0; u < n_; ++u) e = std::max(e, dist(v, u));
  return e;
}

int DistanceOracle::diameter() const {
  int d = 0;
  for (Vertex v = 0; v < n_; ++v) d = std::max(d, eccentricity(v));
  return d;
}

int DistanceOracle::set_diameter(const VertexSet& s) const {
  int d = 0;
  auto e = s.elements();
  for (size_t i = 0; i < e.size(); ++i)
    for (size_t j = i + 1; j < e.size(); ++j) d = std::max(d, dist(e[i], e[j]));
  return d;
}

VertexSet DistanceOracle::interval(Vertex u, Vertex v) const {
  VertexSet s(n_);
  int duv = dist(u, v);
  for (Vertex x = 0; x < n_; ++x)
    if (dist(u, x) + dist(x, v) == duv) s.add(x);
  return s;
}

VertexSet DistanceOracle::ball(Vertex v, int r) const {
  VertexSet s(n_);
  for (Vertex x = 0; x < n_; ++x)
    if (dist(v, x) <= r) s.add(x);
  return s;
}

VertexSet DistanceOracle::sphere(Vertex v, int r) const {
  VertexSet s(n_);
  for (Vertex x = 0; x < n_; ++x)
    if (dist(v, x) == r) s.add(x);
  return s;
}

VertexSet DistanceOracle::ball_around_set(const VertexSet& s, int r) const {
  VertexSet out(n_);
  for (Vertex x = 0; x < n_; ++x)
    for (Vertex y : s.elements())
      if (dist(x, y) <= r) {
        out.add(x);
        break;
      }
  return out;
}

VertexSet DistanceOracle::joint_ball(const VertexSet& s, int k) const {
  if (s.empty()) throw Error("PreconditionViolated", "joint_ball of empty set");
  VertexSet out = VertexSet::full(n_);
  for (Vertex y : s.elements()) out &= ball(y, k);
  return out;
}

VertexSet DistanceOracle::convex_hull(const VertexSet& s) const {
  VertexSet cur = s;
  // Incremental fixpoint: per round only intervals touching newly added
  // vertices need recomputation.
  std::vector<Vertex> fresh = s.elements();
  while (!fresh.empty()) {
    VertexSet added(n_);
    auto members = cur.elements();
    for (Vertex u : fresh)
      for (Vertex v : members) {
        int duv = dist(u, v);
        for (Vertex x = 0; x < n_; ++x)
          if (!cur.contains(x) && !added.contains(x) &&
              dist(u, x) + dist(x, v) == duv)
            added.add(x);
      }
    fresh = added.elements();
    cur |= added;
  }
  return cur;
}

Graph power_graph(const Graph& g, int p) {
  if (p < 1) throw Error("BadParameters", "power must be >= 1");
  if (p == 1) return g;
  DistanceOracle d(g);
  std::vector<std::pair<Vertex, Vertex>> es;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (d.dist(u, v) <= p) es.emplace_back(u, v);
  return Graph(g.n(), es);
}

bool is_isometric_subgraph(const Graph& g, const VertexSet& hv) {
  std::vector<Vertex> back;
  Graph h = g.induced(hv, &back);
  if (!h.is_connected())
    throw Error("PreconditionViolated", "induced subgraph not connected");
  DistanceOracle dg(g), dh(h);
  for (int i = 0; i < h.n(); ++i)
    for (int j = i + 1; j < h.n(); ++j)
      if (dh.dist(i, j) != dg.dist(back[i], back[j])) return false;
  return true;
}

LoadedGraph load_edge_list(std::istream& in) {
  // Two passes so vertices are relabeled in ascending original-id order;
  // a file using ids 0..n-1 loads back unchanged.
  std::vector<std::pair<long long, long long>> raw_edges;
  std::vector<long long> original;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long a, b;
    if (!(ls >> a)) continue;  // blank line
    if (a < 0) throw Error("BadParameters", "negative vertex id on line " +
                                                std::to_string(lineno));
    original.push_back(a);
    if (ls >> b) {
      if (b < 0) throw Error("BadParameters", "negative vertex id on line " +
                                                  std::to_string(lineno));
      if (a == b)
        throw Error("BadParameters", "loop edge on line " + std::to_string(lineno));
      long long extra;
      if (ls >> extra)
        throw Error("BadParameters",
                    "more than two ids on line " + std::to_string(lineno));
      original.push_back(b);
      raw_edges.emplace_back(a, b);
    }
  }
  std::sort(original.begin(), original.end());
  original.erase(std::unique(original.begin(), original.end()), original.end());
  std::map<long long, Vertex> relabel;
  for (size_t i = 0; i < original.size(); ++i) relabel[original[i]] = (Vertex)i;
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(raw_edges.size());
  for (auto [a, b] : raw_edges) edges.emplace_back(relabel[a], relabel[b]);
  Graph g((int)original.size(), edges);
  return LoadedGraph{std::move(g), std::move(original)};
}

LoadedGraph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("BadParameters", "cannot open file: " + path);
  return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  std::vector<char> touched(g.n(), 0);
  for (auto [u, v] : g.edges()) {
    out << u << ' ' << v << '\n';
    touched[u] = touched[v] = 1;
  }
  for (Vertex v = 0; v < g.n(); ++v)
    if (!touched[v]) out << v << '\n';
}

}  // namespace cbg
