#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "laman/errors.hpp"
#include "laman/graph.hpp"

namespace laman {

/// Byte string with the property that two multigraphs (or bigraphs) receive
/// equal keys exactly when they are isomorphic.
struct CanonicalKey {
  std::string bytes;

  friend bool operator==(const CanonicalKey& a, const CanonicalKey& b) {
    return a.bytes == b.bytes;
  }
  friend bool operator!=(const CanonicalKey& a, const CanonicalKey& b) {
    return a.bytes != b.bytes;
  }
  friend bool operator<(const CanonicalKey& a, const CanonicalKey& b) {
    return a.bytes < b.bytes;
  }
};

namespace detail {

/// Vertex-colored simple graph used as the common canonicalization substrate.
/// Multigraphs and bigraphs are encoded as incidence structures over it.
struct ColoredGraph {
  int n = 0;
  std::vector<std::vector<std::int64_t>> palette;  // one color tuple per node
  std::vector<std::pair<int, int>> edges;

  void add_node(std::vector<std::int64_t> color) {
    palette.push_back(std::move(color));
    ++n;
  }

  void add_edge(int a, int b) { edges.emplace_back(a, b); }
};

/// Canonical certificate of a colored graph via individualization-refinement.
///
/// The certificate serializes the sorted palette, the palette id of every
/// node position, and the adjacency matrix under a canonical labeling, so
/// equal certificates imply isomorphism of the colored graphs, not merely a
/// hash collision. Refinement is iterated color refinement; when it stalls on
/// a non-singleton cell, every member is individualized in turn and the
/// lexicographically smallest leaf wins. Automorphisms discovered from equal
/// sibling subtrees prune redundant branches.
class Canonicalizer {
 public:
  explicit Canonicalizer(const ColoredGraph& g)
      : n_(g.n), stride_((g.n + 63) / 64), adj_bits_(std::size_t(g.n) * stride_, 0), adj_(g.n) {
    for (auto [a, b] : g.edges) {
      set_bit(a, b);
      set_bit(b, a);
      adj_[a].push_back(b);
      adj_[b].push_back(a);
    }

    // Palette ids assigned by sorted tuple order, which is iso-invariant.
    std::map<std::vector<std::int64_t>, int> order;
    for (const auto& t : g.palette) order.emplace(t, 0);
    int next = 0;
    for (auto& [tuple, id] : order) id = next++;
    init_color_.resize(n_);
    for (int v = 0; v < n_; ++v) init_color_[v] = order.at(g.palette[v]);

    header_ = serialize_header(order);
  }

  std::string certificate() {
    if (n_ == 0) return header_;
    std::vector<int> colors = init_color_;
    Leaf best = search(std::move(colors));
    return header_ + best.body;
  }

 private:
  struct Leaf {
    std::string body;
    std::vector<int> position;  // node -> canonical position
  };

  static std::string serialize_header(const std::map<std::vector<std::int64_t>, int>& order) {
    std::string out;
    append_u32(out, 0x4c414d31u);  // format tag
    append_u32(out, static_cast<std::uint32_t>(order.size()));
    for (const auto& [tuple, id] : order) {
      append_u32(out, static_cast<std::uint32_t>(tuple.size()));
      for (std::int64_t x : tuple) append_u64(out, static_cast<std::uint64_t>(x));
    }
    return out;
  }

  static void append_u32(std::string& s, std::uint32_t x) {
    for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
  }

  static void append_u64(std::string& s, std::uint64_t x) {
    for (int i = 0; i < 8; ++i) s.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
  }

  void set_bit(int a, int b) {
    adj_bits_[std::size_t(a) * stride_ + b / 64] |= std::uint64_t(1) << (b % 64);
  }

  bool test_bit(int a, int b) const {
    return (adj_bits_[std::size_t(a) * stride_ + b / 64] >> (b % 64)) & 1;
  }

  /// Iterated color refinement; rewrites `colors` in place with contiguous
  /// ids 0..k-1 ordered by (old color, sorted neighbor colors).
  void refine(std::vector<int>& colors) const {
    int classes = 0;
    for (int c : colors) classes = std::max(classes, c + 1);
    std::vector<std::pair<std::vector<int>, int>> sigs(n_);
    while (true) {
      for (int v = 0; v < n_; ++v) {
        auto& sig = sigs[v].first;
        sig.clear();
        sig.push_back(colors[v]);
        for (int w : adj_[v]) sig.push_back(colors[w]);
        std::sort(sig.begin() + 1, sig.end());
        sigs[v].second = v;
      }
      std::vector<int> by_sig(n_);
      for (int v = 0; v < n_; ++v) by_sig[v] = v;
      std::sort(by_sig.begin(), by_sig.end(),
                [&](int a, int b) { return sigs[a].first < sigs[b].first; });
      int next = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && sigs[by_sig[i]].first != sigs[by_sig[i - 1]].first) ++next;
        colors[by_sig[i]] = next;
      }
      ++next;
      if (next == classes || next == n_) break;
      classes = next;
    }
  }

  /// First color class with more than one member, by color id.
  std::vector<int> target_cell(const std::vector<int>& colors) const {
    std::vector<int> count(n_, 0);
    for (int c : colors) ++count[c];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (count[c] > 1) {
        target = c;
        break;
      }
    }
    std::vector<int> cell;
    if (target < 0) return cell;
    for (int v = 0; v < n_; ++v) {
      if (colors[v] == target) cell.push_back(v);
    }
    return cell;
  }

  Leaf search(std::vector<int> colors) {
    refine(colors);
    std::vector<int> cell = target_cell(colors);
    if (cell.empty()) return make_leaf(colors);

    // Sibling subtrees reached from automorphic cell members produce equal
    // certificates; a union-find over automorphisms discovered from equal
    // leaves lets us skip them. Any automorphism derived from two leaves
    // below this node fixes every vertex individualized above it (those are
    // singleton classes on both sides), so the pruning is stabilizer-safe.
    UnionFind orbits(n_);
    std::vector<int> tried;
    std::optional<Leaf> best;
    for (int v : cell) {
      bool skip = false;
      for (int u : tried) {
        if (orbits.connected(u, v)) {
          skip = true;
          break;
        }
      }
      if (skip) continue;
      tried.push_back(v);

      std::vector<int> child = colors;
      child[v] = n_;  // fresh color, sorts after all refined ids
      Leaf leaf = search(std::move(child));
      if (!best || leaf.body < best->body) {
        best = std::move(leaf);
      } else if (leaf.body == best->body) {
        // position arrays of equal-certificate leaves compose to an
        // automorphism: node x and the node occupying x's position in the
        // other leaf are interchangeable.
        std::vector<int> at_pos(n_);
        for (int x = 0; x < n_; ++x) at_pos[leaf.position[x]] = x;
        for (int x = 0; x < n_; ++x) orbits.unite(x, at_pos[best->position[x]]);
      }
    }
    return std::move(*best);
  }

  Leaf make_leaf(const std::vector<int>& colors) const {
    Leaf leaf;
    leaf.position = colors;  // discrete coloring: color id == position
    std::vector<int> node_at(n_);
    for (int v = 0; v < n_; ++v) node_at[colors[v]] = v;

    std::string& body = leaf.body;
    append_u32(body, static_cast<std::uint32_t>(n_));
    for (int p = 0; p < n_; ++p) append_u32(body, static_cast<std::uint32_t>(init_color_[node_at[p]]));
    std::uint8_t acc = 0;
    int nbits = 0;
    for (int p = 0; p < n_; ++p) {
      for (int q = p + 1; q < n_; ++q) {
        acc = static_cast<std::uint8_t>((acc << 1) | (test_bit(node_at[p], node_at[q]) ? 1 : 0));
        if (++nbits == 8) {
          body.push_back(static_cast<char>(acc));
          acc = 0;
          nbits = 0;
        }
      }
    }
    if (nbits > 0) body.push_back(static_cast<char>(acc << (8 - nbits)));
    return leaf;
  }

  int n_;
  std::size_t stride_;
  std::vector<std::uint64_t> adj_bits_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> init_color_;
  std::string header_;
};

inline std::string colored_certificate(const ColoredGraph& g) {
  Canonicalizer c(g);
  return c.certificate();
}

/// Incidence encoding of a multigraph: one node per vertex (colored by its
/// self-loop count) and one node per parallel class of non-loop edges
/// (colored by its multiplicity). Bundling parallel edges into one node keeps
/// highly multi-edged quotients from blowing up the refinement search.
inline ColoredGraph multigraph_incidence(const Multigraph& g) {
  ColoredGraph cg;
  auto index = [&] {
    std::unordered_map<Vertex, int> map;
    const auto& vs = g.vertices();
    for (int i = 0; i < static_cast<int>(vs.size()); ++i) map[vs[i]] = i;
    return map;
  }();

  std::vector<std::int64_t> loops(g.vertex_count(), 0);
  std::map<std::pair<int, int>, int> bundles;
  for (const MultiEdge& e : g.edges()) {
    int a = index.at(e.a), b = index.at(e.b);
    if (a == b) {
      ++loops[a];
    } else {
      ++bundles[{std::min(a, b), std::max(a, b)}];
    }
  }

  for (int v = 0; v < g.vertex_count(); ++v) cg.add_node({0, loops[v]});
  for (const auto& [pair, mult] : bundles) {
    int node = cg.n;
    cg.add_node({1, mult});
    cg.add_edge(node, pair.first);
    cg.add_edge(node, pair.second);
  }
  return cg;
}

}  // namespace detail

/// Canonical key of a multigraph: equal keys iff isomorphic, respecting
/// loops and edge multiplicities. Deterministic across runs.
inline CanonicalKey canonical_key(const Multigraph& g) {
  return CanonicalKey{detail::colored_certificate(detail::multigraph_incidence(g))};
}

inline CanonicalKey canonical_key(const SimpleGraph& g) {
  return canonical_key(Multigraph::from_simple(g));
}

}  // namespace laman

template <>
struct std::hash<laman::CanonicalKey> {
  std::size_t operator()(const laman::CanonicalKey& k) const noexcept {
    return std::hash<std::string>{}(k.bytes);
  }
};
