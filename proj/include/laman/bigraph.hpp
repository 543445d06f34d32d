#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "laman/canonical.hpp"
#include "laman/errors.hpp"
#include "laman/graph.hpp"

namespace laman {

/// Pair of multigraphs sharing one biedge set: every edge id exists on both
/// sides, with independent endpoints per side. Vertex ids of the two sides
/// live in separate namespaces.
class Bigraph {
 public:
  Bigraph(Multigraph g, Multigraph h) : g_(std::move(g)), h_(std::move(h)) {
    auto gids = g_.edge_ids();
    auto hids = h_.edge_ids();
    std::sort(gids.begin(), gids.end());
    std::sort(hids.begin(), hids.end());
    if (gids != hids) throw invalid_input_error("bigraph sides must share one edge-id set");
    biedges_ = std::move(gids);
  }

  const Multigraph& g() const noexcept { return g_; }
  const Multigraph& h() const noexcept { return h_; }
  /// Shared edge ids, ascending.
  const std::vector<EdgeId>& biedges() const noexcept { return biedges_; }
  int biedge_count() const noexcept { return static_cast<int>(biedges_.size()); }

  friend bool operator==(const Bigraph& a, const Bigraph& b) {
    return a.g_ == b.g_ && a.h_ == b.h_;
  }

 private:
  Multigraph g_;
  Multigraph h_;
  std::vector<EdgeId> biedges_;
};

/// The bigraph (G, G): both sides copies of the same simple graph with
/// matching edge ids.
inline Bigraph bigraph_of(const SimpleGraph& g) {
  Multigraph m = Multigraph::from_simple(g);
  return Bigraph(m, m);
}

inline Bigraph swap_sides(const Bigraph& b) { return Bigraph(b.h(), b.g()); }

/// dim(G) + dim(H) = |biedges| + 1.
inline bool is_pseudo_laman(const Bigraph& b) {
  return dim(b.g()) + dim(b.h()) == b.biedge_count() + 1;
}

/// Left quotient: contract the edges of m on the g-side, delete them on the
/// h-side. The biedge set shrinks to the complement of m.
inline Bigraph left_quot(const Bigraph& b, const EdgeSubset& m) {
  return Bigraph(quotient(b.g(), m), restrict_away(b.h(), m));
}

/// Right quotient: delete the edges of n on the g-side, contract them on the
/// h-side. Mirror image of left_quot.
inline Bigraph right_quot(const Bigraph& b, const EdgeSubset& n) {
  return Bigraph(restrict_away(b.g(), n), quotient(b.h(), n));
}

/// Cover of the biedges by two sets meeting exactly in the chosen edge;
/// drives the product terms of the counting recursion.
struct SplitPair {
  EdgeSubset m;
  EdgeSubset n;

  friend bool operator==(const SplitPair& a, const SplitPair& b) {
    return a.m == b.m && a.n == b.n;
  }
};

namespace detail {

/// Three-layer incidence encoding of a bigraph: g-vertex nodes, h-vertex
/// nodes, and one node per twin class of biedges (same endpoint pair on both
/// sides), colored by multiplicity and per-side loop flags.
inline ColoredGraph bigraph_incidence(const Multigraph& g, const Multigraph& h) {
  ColoredGraph cg;
  auto make_index = [](const Multigraph& side) {
    std::unordered_map<Vertex, int> map;
    const auto& vs = side.vertices();
    for (int i = 0; i < static_cast<int>(vs.size()); ++i) map[vs[i]] = i;
    return map;
  };
  auto gidx = make_index(g);
  auto hidx = make_index(h);

  for (int i = 0; i < g.vertex_count(); ++i) cg.add_node({0});
  const int h_base = cg.n;
  for (int i = 0; i < h.vertex_count(); ++i) cg.add_node({1});

  std::unordered_map<EdgeId, std::pair<int, int>> h_ends;
  h_ends.reserve(h.edges().size());
  for (const MultiEdge& e : h.edges()) {
    int a = hidx.at(e.a), b = hidx.at(e.b);
    h_ends[e.id] = {std::min(a, b), std::max(a, b)};
  }

  std::map<std::array<int, 4>, int> twins;
  for (const MultiEdge& e : g.edges()) {
    int a = gidx.at(e.a), b = gidx.at(e.b);
    auto [c, d] = h_ends.at(e.id);
    ++twins[{std::min(a, b), std::max(a, b), c, d}];
  }

  for (const auto& [ends, mult] : twins) {
    int node = cg.n;
    cg.add_node({2, mult, ends[0] == ends[1] ? 1 : 0, ends[2] == ends[3] ? 1 : 0});
    cg.add_edge(node, ends[0]);
    if (ends[1] != ends[0]) cg.add_edge(node, ends[1]);
    cg.add_edge(node, h_base + ends[2]);
    if (ends[3] != ends[2]) cg.add_edge(node, h_base + ends[3]);
  }
  return cg;
}

}  // namespace detail

/// Canonical key of a bigraph: equal keys iff there are vertex bijections on
/// both sides and a biedge bijection preserving both incidence structures.
inline CanonicalKey canonical_bigraph_key(const Bigraph& b) {
  return CanonicalKey{detail::colored_certificate(detail::bigraph_incidence(b.g(), b.h()))};
}

}  // namespace laman
