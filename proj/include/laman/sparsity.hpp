#pragma once

#include <string>
#include <vector>

#include "laman/errors.hpp"
#include "laman/graph.hpp"

namespace laman {

enum class LamanClass { laman, flexible, overconstrained, mixed };

inline std::string to_string(LamanClass c) {
  switch (c) {
    case LamanClass::laman: return "laman";
    case LamanClass::flexible: return "flexible";
    case LamanClass::overconstrained: return "overconstrained";
    case LamanClass::mixed: return "mixed";
  }
  return "unknown";
}

namespace detail {

/// (2,3)-pebble game. Every vertex starts with two pebbles; an edge is
/// accepted once four pebbles sit on its endpoints, after which one pebble
/// on the tail is consumed and the edge is oriented away from it. The number
/// of accepted edges equals the rank of the edge set in the (2,3)-sparsity
/// matroid, so a set of edges is independent iff all of them are accepted.
class PebbleGame23 {
 public:
  explicit PebbleGame23(int n) : pebbles_(n, 2), out_(n), seen_(n, 0) {}

  bool try_insert(int u, int v) {
    while (pebbles_[u] + pebbles_[v] < 4) {
      if (!gather(u, v) && !gather(v, u)) return false;
    }
    --pebbles_[u];
    out_[u].push_back(v);
    return true;
  }

 private:
  /// Searches along directed edges from `start` for a vertex holding a free
  /// pebble, never entering `avoid`; on success the path is reversed and the
  /// pebble moves to `start`.
  bool gather(int start, int avoid) {
    ++stamp_;
    seen_[start] = stamp_;
    seen_[avoid] = stamp_;
    if (dfs(start)) {
      ++pebbles_[start];
      return true;
    }
    return false;
  }

  bool dfs(int v) {
    for (std::size_t i = 0; i < out_[v].size(); ++i) {
      int w = out_[v][i];
      if (seen_[w] == stamp_) continue;
      seen_[w] = stamp_;
      if (pebbles_[w] > 0) {
        --pebbles_[w];
        reverse_edge(v, i);
        return true;
      }
      if (dfs(w)) {
        reverse_edge(v, i);
        return true;
      }
    }
    return false;
  }

  void reverse_edge(int v, std::size_t i) {
    int w = out_[v][i];
    out_[v][i] = out_[v].back();
    out_[v].pop_back();
    out_[w].push_back(v);
  }

  std::vector<int> pebbles_;
  std::vector<std::vector<int>> out_;
  std::vector<int> seen_;
  int stamp_ = 0;
};

/// Rank of g's edge set in the (2,3)-sparsity matroid.
inline int pebble_rank(const SimpleGraph& g) {
  auto index = g.dense_index_map();
  PebbleGame23 game(g.vertex_count());
  int rank = 0;
  for (const auto& [u, v] : g.edges()) {
    if (game.try_insert(index.at(u), index.at(v))) ++rank;
  }
  return rank;
}

}  // namespace detail

/// Laman property: |E| = 2|V| - 3 and every subgraph on at least two
/// vertices spans at most 2|V'| - 3 edges.
inline bool is_laman(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw invalid_input_error("is_laman requires at least 2 vertices");
  if (g.edge_count() != 2 * n - 3) return false;
  return detail::pebble_rank(g) == g.edge_count();
}

/// Refines the Laman test: `overconstrained` graphs contain a subgraph with
/// too many edges but still span the full 2|V| - 3 degrees of freedom;
/// `flexible` graphs are sparse everywhere but short of edges; `mixed` graphs
/// have an overcounted part and missing freedom elsewhere at the same time.
inline LamanClass laman_defect(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw invalid_input_error("laman_defect requires at least 2 vertices");
  const int m = g.edge_count();
  const int target = 2 * n - 3;
  const int rank = detail::pebble_rank(g);
  if (rank == m) return m == target ? LamanClass::laman : LamanClass::flexible;
  return rank == target ? LamanClass::overconstrained : LamanClass::mixed;
}

}  // namespace laman
