#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "laman/bigraph.hpp"
#include "laman/canonical.hpp"
#include "laman/codecs.hpp"
#include "laman/graph.hpp"
#include "laman/sparsity.hpp"

namespace testsup {

using laman::Edge;
using laman::SimpleGraph;
using laman::Vertex;

inline std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  return pairs;
}

inline std::vector<Edge> edges_of_mask(const std::vector<Edge>& pairs, std::uint32_t mask) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if ((mask >> i) & 1) edges.push_back(pairs[i]);
  }
  return edges;
}

/// Definition-level sparsity check: |E| = 2n-3 and every vertex subset of
/// size >= 2 spans at most 2|S|-3 edges. Exponential on purpose; the oracle
/// must not share logic with the pebble game.
inline bool is_laman_oracle(int n, const std::vector<Edge>& edges) {
  if (n < 2) return false;
  if (static_cast<int>(edges.size()) != 2 * n - 3) return false;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    int size = __builtin_popcount(subset);
    if (size < 2) continue;
    int induced = 0;
    for (const auto& [u, v] : edges) {
      if (((subset >> u) & 1) && ((subset >> v) & 1)) ++induced;
    }
    if (induced > 2 * size - 3) return false;
  }
  return true;
}

/// Greedy matroid rank: a set is independent when every vertex subset spans
/// at most 2|S|-3 of its edges; greedy insertion computes the rank of any
/// matroid, and hereditary sparsity is one.
inline int rank_oracle(int n, const std::vector<Edge>& edges) {
  std::vector<Edge> kept;
  auto independent = [&](const std::vector<Edge>& f) {
    for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
      int size = __builtin_popcount(subset);
      if (size < 2) continue;
      int induced = 0;
      for (const auto& [u, v] : f) {
        if (((subset >> u) & 1) && ((subset >> v) & 1)) ++induced;
      }
      if (induced > 2 * size - 3) return false;
    }
    return true;
  };
  for (const auto& e : edges) {
    kept.push_back(e);
    if (!independent(kept)) kept.pop_back();
  }
  return static_cast<int>(kept.size());
}

/// Random Laman graph grown from a triangle by repeated degree-2 vertex
/// additions. Covers a strict subset of all Laman graphs, which is fine for
/// property tests that need many valid inputs cheaply.
inline SimpleGraph random_laman(std::mt19937_64& rng, int n) {
  SimpleGraph g = SimpleGraph::from_edges({{0, 1}, {0, 2}, {1, 2}});
  for (int v = 3; v < n; ++v) {
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    Vertex a = pick(rng);
    Vertex b = pick(rng);
    while (b == a) b = pick(rng);
    g = laman::henneberg1(g, a, b);
  }
  return g;
}

inline SimpleGraph relabel_randomly(std::mt19937_64& rng, const SimpleGraph& g) {
  std::vector<Vertex> perm(g.vertices());
  std::shuffle(perm.begin(), perm.end(), rng);
  std::unordered_map<Vertex, Vertex> map;
  for (std::size_t i = 0; i < perm.size(); ++i) map[g.vertices()[i]] = perm[i];
  return g.relabeled(map);
}

/// Every Laman graph with 3..max_n vertices, one representative per
/// isomorphism class.
inline const std::vector<SimpleGraph>& laman_classes_up_to(int max_n) {
  static std::map<int, std::vector<SimpleGraph>> cache;
  auto& out = cache[max_n];
  if (!out.empty()) return out;
  std::set<laman::CanonicalKey> seen;
  for (int n = 3; n <= max_n; ++n) {
    const std::vector<Edge> pairs = all_pairs(n);
    const int m = 2 * n - 3;
    // Walk all edge subsets of size m via the lexicographic combination trick.
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    while (true) {
      std::vector<Edge> edges;
      edges.reserve(m);
      for (int i : idx) edges.push_back(pairs[i]);
      SimpleGraph g = SimpleGraph::from_edges(edges, [&] {
        std::vector<Vertex> vs(n);
        for (int i = 0; i < n; ++i) vs[i] = i;
        return vs;
      }());
      if (laman::is_laman(g) && seen.insert(laman::canonical_key(g)).second) out.push_back(g);

      int i = m - 1;
      while (i >= 0 && idx[i] == static_cast<int>(pairs.size()) - m + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

inline SimpleGraph load_fixture_file(const std::string& name) {
  std::ifstream f(std::string(LAMAN_DATA_DIR) + "/" + name + ".edges");
  std::ostringstream text;
  text << f.rdbuf();
  return laman::parse_edge_list(text.str());
}

inline laman::Bigraph bigraph_of_edges(std::vector<Edge> edges) {
  return laman::bigraph_of(SimpleGraph::from_edges(std::move(edges)));
}

}  // namespace testsup
