#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "laman/errors.hpp"

namespace laman {

using Vertex = int;
using EdgeId = int;

/// Undirected edge of a simple graph, stored with endpoints in ascending order.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) {
  if (u == v) throw invalid_input_error("self-loop not allowed in a simple graph");
  return u < v ? Edge{u, v} : Edge{v, u};
}

/// Simple undirected graph over arbitrary nonnegative vertex ids.
/// Vertices are kept sorted; edges are kept sorted with ascending endpoints.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  static SimpleGraph from_edges(const std::vector<Edge>& edges,
                                const std::vector<Vertex>& extra_vertices = {}) {
    SimpleGraph g;
    std::set<Vertex> vs(extra_vertices.begin(), extra_vertices.end());
    std::set<Edge> es;
    for (const auto& [u, v] : edges) {
      Edge e = make_edge(u, v);
      if (!es.insert(e).second) throw invalid_input_error("duplicate edge");
      vs.insert(e.first);
      vs.insert(e.second);
    }
    for (Vertex v : vs) {
      if (v < 0) throw invalid_input_error("negative vertex id");
      g.vertices_.push_back(v);
    }
    g.edges_.assign(es.begin(), es.end());
    return g;
  }

  /// Graph on vertices 0..n-1 with no edges.
  static SimpleGraph empty(int n) {
    SimpleGraph g;
    g.vertices_.resize(n);
    std::iota(g.vertices_.begin(), g.vertices_.end(), 0);
    return g;
  }

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  int vertex_count() const noexcept { return static_cast<int>(vertices_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  bool has_vertex(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  bool has_edge(Vertex u, Vertex v) const {
    if (u == v) return false;
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(u, v));
  }

  /// True when vertex ids are exactly 0..n-1.
  bool has_dense_ids() const {
    for (int i = 0; i < vertex_count(); ++i) {
      if (vertices_[i] != i) return false;
    }
    return true;
  }

  int degree(Vertex v) const {
    int d = 0;
    for (const auto& [a, b] : edges_) d += (a == v) + (b == v);
    return d;
  }

  /// Same graph with vertices relabeled to 0..n-1 in ascending id order.
  SimpleGraph densified() const { return relabeled(dense_index_map()); }

  /// Relabels through an explicit map (must be injective on the vertex set).
  SimpleGraph relabeled(const std::unordered_map<Vertex, Vertex>& map) const {
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (const auto& [u, v] : edges_) es.push_back(make_edge(map.at(u), map.at(v)));
    std::vector<Vertex> vs;
    vs.reserve(vertices_.size());
    for (Vertex v : vertices_) vs.push_back(map.at(v));
    return from_edges(es, vs);
  }

  std::unordered_map<Vertex, Vertex> dense_index_map() const {
    std::unordered_map<Vertex, Vertex> map;
    map.reserve(vertices_.size());
    for (int i = 0; i < vertex_count(); ++i) map[vertices_[i]] = i;
    return map;
  }

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

/// One edge of a multigraph. Carries a stable id that survives contraction;
/// a == b encodes a self-loop.
struct MultiEdge {
  EdgeId id;
  Vertex a;
  Vertex b;

  friend bool operator==(const MultiEdge& x, const MultiEdge& y) {
    return x.id == y.id && x.a == y.a && x.b == y.b;
  }
};

/// Undirected multigraph: loops and parallel edges allowed, edges identified
/// by id. The edge list keeps its insertion order.
class Multigraph {
 public:
  Multigraph() = default;

  static Multigraph make(std::vector<Vertex> vertices, std::vector<MultiEdge> edges) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    Multigraph g;
    g.vertices_ = std::move(vertices);
    std::set<EdgeId> ids;
    for (const MultiEdge& e : edges) {
      if (!ids.insert(e.id).second) throw invalid_input_error("duplicate edge id");
      if (!g.has_vertex(e.a) || !g.has_vertex(e.b))
        throw invalid_input_error("edge endpoint is not a vertex");
    }
    g.edges_ = std::move(edges);
    return g;
  }

  /// Copy of a simple graph; edge ids are 0..m-1 in the simple graph's
  /// (sorted) edge order.
  static Multigraph from_simple(const SimpleGraph& g) {
    std::vector<MultiEdge> es;
    es.reserve(g.edges().size());
    EdgeId id = 0;
    for (const auto& [u, v] : g.edges()) es.push_back({id++, u, v});
    return make(g.vertices(), std::move(es));
  }

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<MultiEdge>& edges() const noexcept { return edges_; }
  int vertex_count() const noexcept { return static_cast<int>(vertices_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  bool has_vertex(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  bool has_edge_id(EdgeId id) const {
    for (const MultiEdge& e : edges_) {
      if (e.id == id) return true;
    }
    return false;
  }

  const MultiEdge& edge_by_id(EdgeId id) const {
    for (const MultiEdge& e : edges_) {
      if (e.id == id) return e;
    }
    throw invalid_input_error("unknown edge id " + std::to_string(id));
  }

  bool has_loop() const {
    for (const MultiEdge& e : edges_) {
      if (e.a == e.b) return true;
    }
    return false;
  }

  std::vector<EdgeId> edge_ids() const {
    std::vector<EdgeId> ids;
    ids.reserve(edges_.size());
    for (const MultiEdge& e : edges_) ids.push_back(e.id);
    return ids;
  }

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<MultiEdge> edges_;
};

/// Set of edge ids referring to a host multigraph.
class EdgeSubset {
 public:
  EdgeSubset() = default;

  explicit EdgeSubset(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  const std::vector<EdgeId>& ids() const noexcept { return ids_; }
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }

  bool contains(EdgeId id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
  }

  void check_against(const Multigraph& host) const {
    for (EdgeId id : ids_) {
      if (!host.has_edge_id(id))
        throw invalid_input_error("edge id " + std::to_string(id) + " not in host graph");
    }
  }

  friend bool operator==(const EdgeSubset& a, const EdgeSubset& b) { return a.ids_ == b.ids_; }

 private:
  std::vector<EdgeId> ids_;
};

namespace detail {

/// Union-find over 0..n-1 with union by size. No path compression so that
/// unions can be undone in O(1); see the split enumerator.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  /// Returns true if the roots were distinct (rank grew by one).
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    history_.push_back({x, y});
    return true;
  }

  bool connected(int x, int y) const { return find(x) == find(y); }

  /// Undoes the most recent successful unite.
  void undo() {
    auto [x, y] = history_.back();
    history_.pop_back();
    size_[x] -= size_[y];
    parent_[y] = y;
  }

  std::size_t checkpoint() const noexcept { return history_.size(); }

  void rollback(std::size_t mark) {
    while (history_.size() > mark) undo();
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<std::pair<int, int>> history_;
};

}  // namespace detail

/// Partition of the vertex set into connected components. Parts are sorted
/// internally and ordered by smallest member; isolated vertices give
/// singleton parts.
inline std::vector<std::vector<Vertex>> components(const Multigraph& g) {
  const auto& vs = g.vertices();
  const int n = static_cast<int>(vs.size());
  std::unordered_map<Vertex, int> index;
  index.reserve(vs.size());
  for (int i = 0; i < n; ++i) index[vs[i]] = i;

  detail::UnionFind uf(n);
  for (const MultiEdge& e : g.edges()) uf.unite(index[e.a], index[e.b]);

  std::unordered_map<int, std::size_t> part_of_root;
  std::vector<std::vector<Vertex>> parts;
  for (int i = 0; i < n; ++i) {
    int r = uf.find(i);
    auto it = part_of_root.find(r);
    if (it == part_of_root.end()) {
      part_of_root.emplace(r, parts.size());
      parts.push_back({vs[i]});
    } else {
      parts[it->second].push_back(vs[i]);
    }
  }
  return parts;
}

/// |V| minus the number of connected components; equals the graphic-matroid
/// rank of the edge set.
inline int dim(const Multigraph& g) {
  return g.vertex_count() - static_cast<int>(components(g).size());
}

/// Contracts the edges in `s`: vertices become connectivity classes of the
/// subgraph spanned by `s`, renumbered 0..k-1 by smallest original member.
/// Surviving edges keep their ids; loops and parallel edges may appear.
inline Multigraph quotient(const Multigraph& g, const EdgeSubset& s) {
  s.check_against(g);
  const auto& vs = g.vertices();
  const int n = static_cast<int>(vs.size());
  std::unordered_map<Vertex, int> index;
  index.reserve(vs.size());
  for (int i = 0; i < n; ++i) index[vs[i]] = i;

  detail::UnionFind uf(n);
  for (const MultiEdge& e : g.edges()) {
    if (s.contains(e.id)) uf.unite(index[e.a], index[e.b]);
  }

  // Classes numbered in order of first appearance over ascending vertex ids,
  // i.e. by smallest original member.
  std::vector<int> class_of(n, -1);
  int next_class = 0;
  for (int i = 0; i < n; ++i) {
    int r = uf.find(i);
    if (class_of[r] < 0) class_of[r] = next_class++;
    class_of[i] = class_of[r];
  }

  std::vector<Vertex> new_vertices(next_class);
  std::iota(new_vertices.begin(), new_vertices.end(), 0);
  std::vector<MultiEdge> new_edges;
  new_edges.reserve(g.edge_count() - static_cast<int>(s.size()));
  for (const MultiEdge& e : g.edges()) {
    if (!s.contains(e.id)) new_edges.push_back({e.id, class_of[index[e.a]], class_of[index[e.b]]});
  }
  return Multigraph::make(std::move(new_vertices), std::move(new_edges));
}

/// Deletes the edges in `s` and every vertex left without an incident edge.
inline Multigraph restrict_away(const Multigraph& g, const EdgeSubset& s) {
  s.check_against(g);
  std::vector<MultiEdge> new_edges;
  std::set<Vertex> touched;
  for (const MultiEdge& e : g.edges()) {
    if (s.contains(e.id)) continue;
    new_edges.push_back(e);
    touched.insert(e.a);
    touched.insert(e.b);
  }
  return Multigraph::make({touched.begin(), touched.end()}, std::move(new_edges));
}

/// Henneberg step of type 1: one fresh vertex joined to the two given ones.
inline SimpleGraph henneberg1(const SimpleGraph& g, Vertex u, Vertex v) {
  if (u == v) throw invalid_input_error("henneberg1 endpoints must differ");
  if (!g.has_vertex(u) || !g.has_vertex(v))
    throw invalid_input_error("henneberg1 endpoint not in graph");
  Vertex fresh = g.vertices().empty() ? 0 : g.vertices().back() + 1;
  std::vector<Edge> es = g.edges();
  es.push_back(make_edge(u, fresh));
  es.push_back(make_edge(v, fresh));
  return SimpleGraph::from_edges(es, g.vertices());
}

}  // namespace laman
