#pragma once

// Core vocabulary: finite simple undirected graphs over dense integer ids,
// all-pairs distances, intervals, balls, convex hulls, powers and isometry
// checks. Everything else in the library is built on top of these.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cbg {

using Vertex = int;

// Library-wide error with a stable machine-readable kind tag
// (e.g. "DisconnectedGraph", "PreconditionViolated", "BadParameters").
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Subset of a fixed vertex universe 0..n-1, bitset semantics.
class VertexSet {
 public:
  VertexSet() : n_(0) {}
  explicit VertexSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int universe() const { return n_; }
  bool contains(Vertex v) const { return (w_[v >> 6] >> (v & 63)) & 1; }
  void add(Vertex v) { w_[v >> 6] |= uint64_t(1) << (v & 63); }
  void remove(Vertex v) { w_[v >> 6] &= ~(uint64_t(1) << (v & 63)); }
  int size() const;
  bool empty() const;
  bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }
  bool is_subset_of(const VertexSet& o) const;
  bool intersects(const VertexSet& o) const;

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  // Members in ascending order.
  std::vector<Vertex> elements() const;
  // Smallest member, or -1 when empty.
  Vertex first() const;

  static VertexSet of(int n, std::initializer_list<Vertex> vs) {
    VertexSet s(n);
    for (Vertex v : vs) s.add(v);
    return s;
  }
  static VertexSet full(int n) {
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v) s.add(v);
    return s;
  }

  // Lexicographic order on the sorted element lists; used for deterministic
  // "least witness" selection.
  bool lex_less(const VertexSet& o) const;

 private:
  int n_;
  std::vector<uint64_t> w_;
};

// Immutable simple undirected graph; vertex ids are exactly 0..n-1.
class Graph {
 public:
  Graph() : n_(0) {}
  // Rejects loops, merges duplicate edges, validates the id range.
  Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  int n() const { return n_; }
  int m() const { return m_; }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  const VertexSet& neighbor_set(Vertex v) const { return rows_[v]; }
  int degree(Vertex v) const { return (int)adj_[v].size(); }
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool is_connected() const;
  // Induced subgraph on S; `back` (if non-null) receives the S-index -> G-id map.
  Graph induced(const VertexSet& s, std::vector<Vertex>* back = nullptr) const;

 private:
  int n_;
  int m_ = 0;
  std::vector<std::vector<Vertex>> adj_;  // sorted neighbor lists
  std::vector<VertexSet> rows_;           // adjacency rows as bitsets
};

// Materialized all-pairs hop distances with interval/ball/hull queries.
class DistanceOracle {
 public:
  DistanceOracle() : n_(0) {}
  // Throws Error("DisconnectedGraph") if some pair is unreachable.
  explicit DistanceOracle(const Graph& g);

  int n() const { return n_; }
  int dist(Vertex u, Vertex v) const { return d_[(size_t)u * n_ + v]; }
  int eccentricity(Vertex v) const;
  int diameter() const;
  bool on_geodesic(Vertex u, Vertex x, Vertex v) const {
    return dist(u, x) + dist(x, v) == dist(u, v);
  }
  int set_diameter(const VertexSet& s) const;

  VertexSet interval(Vertex u, Vertex v) const;
  VertexSet ball(Vertex v, int r) const;
  VertexSet sphere(Vertex v, int r) const;
  VertexSet ball_around_set(const VertexSet& s, int r) const;
  // B*_k(S): intersection of the k-balls of the members of S.
  VertexSet joint_ball(const VertexSet& s, int k) const;
  // Least interval-closed superset; hull of the empty set is empty.
  VertexSet convex_hull(const VertexSet& s) const;

 private:
  int n_;
  std::vector<int16_t> d_;
};

// Same vertices; u~v iff 1 <= d_g(u,v) <= p.
Graph power_graph(const Graph& g, int p);

// True iff the (connected) induced subgraph on `hv` has the ambient metric.
bool is_isometric_subgraph(const Graph& g, const VertexSet& hv);

// ---- Edge-list text I/O ----
// Format: one edge "u v" per line; a single id on a line declares an isolated
// vertex; '#' starts a comment. Ids are arbitrary non-negative integers and
// are relabeled to 0..n-1 on load.
struct LoadedGraph {
  Graph graph;
  std::vector<long long> original_id;  // new id -> original id
};
LoadedGraph load_edge_list(std::istream& in);
LoadedGraph load_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace cbg
