#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "laman/bigint.hpp"
#include "laman/engine.hpp"
#include "laman/errors.hpp"
#include "laman/graph.hpp"
#include "laman/sparsity.hpp"

namespace laman {

namespace detail {

/// Shared gluing core: k copies of g overlapping exactly in the designated
/// subgraph. The shared part keeps ids 0..|W|-1 (in sorted order of its
/// original ids); copy c's private vertices follow as one contiguous block.
inline SimpleGraph glue_copies(const SimpleGraph& g, const SimpleGraph& shared, int k) {
  if (k < 1) throw invalid_input_error("copy count must be at least 1");
  if (!is_laman(g)) throw invalid_input_error("base graph is not minimally rigid");
  if (!is_laman(shared)) throw invalid_input_error("shared subgraph is not minimally rigid");
  for (Vertex w : shared.vertices()) {
    if (!g.has_vertex(w)) throw invalid_input_error("shared subgraph has a vertex outside the base graph");
  }
  for (const auto& [u, v] : shared.edges()) {
    if (!g.has_edge(u, v)) throw invalid_input_error("shared subgraph has an edge outside the base graph");
  }
  for (const auto& [u, v] : g.edges()) {
    if (shared.has_vertex(u) && shared.has_vertex(v) && !shared.has_edge(u, v)) {
      throw invalid_input_error("shared subgraph is not induced in the base graph");
    }
  }

  const std::vector<Vertex>& shared_ids = shared.vertices();
  std::vector<Vertex> rest;
  for (Vertex v : g.vertices()) {
    if (!shared.has_vertex(v)) rest.push_back(v);
  }
  auto index_of = [](const std::vector<Vertex>& ids, Vertex v) {
    return static_cast<Vertex>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  };

  std::set<Edge> out;
  for (int c = 0; c < k; ++c) {
    auto relabel = [&](Vertex v) -> Vertex {
      if (shared.has_vertex(v)) return index_of(shared_ids, v);
      return static_cast<Vertex>(shared_ids.size()) + c * static_cast<Vertex>(rest.size()) +
             index_of(rest, v);
    };
    for (const auto& [u, v] : g.edges()) out.insert(make_edge(relabel(u), relabel(v)));
  }
  return SimpleGraph::from_edges(std::vector<Edge>(out.begin(), out.end()));
}

inline std::optional<std::array<Vertex, 3>> find_triangle(const SimpleGraph& g) {
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.has_edge(vs[i], vs[j])) continue;
      for (std::size_t l = j + 1; l < vs.size(); ++l) {
        if (g.has_edge(vs[i], vs[l]) && g.has_edge(vs[j], vs[l])) {
          return std::array<Vertex, 3>{vs[i], vs[j], vs[l]};
        }
      }
    }
  }
  return std::nullopt;
}

/// 2^r * lam_h * (lam_g / lam_h)^q evaluated exactly over the integers;
/// raises computation_error when the rational is not integral.
inline BigUint exact_glue_bound(std::uint64_t lam_g, std::uint64_t lam_h, long q, long r) {
  BigUint value = BigUint::two_pow(static_cast<std::uint64_t>(r)) * BigUint(lam_h);
  for (long i = 0; i < q; ++i) value = value * BigUint(lam_g);
  for (long i = 0; i < q; ++i) value = value.div_exact(lam_h);
  return value;
}

}  // namespace detail

inline SimpleGraph caterpillar(const SimpleGraph& g, int k, Edge shared_edge) {
  if (!g.has_edge(shared_edge.first, shared_edge.second)) {
    throw invalid_input_error("shared edge is not an edge of the base graph");
  }
  return detail::glue_copies(g, SimpleGraph::from_edges({shared_edge}), k);
}

inline SimpleGraph fan(const SimpleGraph& g, const std::array<Vertex, 3>& t, int k) {
  Vertex a = t[0], b = t[1], c = t[2];
  if (a == b || a == c || b == c || !g.has_edge(a, b) || !g.has_edge(a, c) || !g.has_edge(b, c)) {
    throw invalid_input_error("shared triple is not a triangle of the base graph");
  }
  return detail::glue_copies(
      g, SimpleGraph::from_edges({make_edge(a, b), make_edge(a, c), make_edge(b, c)}), k);
}

inline SimpleGraph generalized_fan(const SimpleGraph& g, const SimpleGraph& h_sub, int k) {
  return detail::glue_copies(g, h_sub, k);
}

inline BigUint caterpillar_bound(const SimpleGraph& g, long n) {
  if (g.vertex_count() < 3) throw invalid_input_error("caterpillar bound needs at least 3 base vertices");
  if (n < 2) throw invalid_input_error("target vertex count must be at least 2");
  const long step = g.vertex_count() - 2;
  const std::uint64_t lam = laman_number(g).value();
  return detail::exact_glue_bound(lam, 1, (n - 2) / step, (n - 2) % step);
}

inline BigUint fan_bound(const SimpleGraph& g, long n) {
  if (g.vertex_count() < 4) throw invalid_input_error("fan bound needs at least 4 base vertices");
  if (n < 3) throw invalid_input_error("target vertex count must be at least 3");
  if (!detail::find_triangle(g)) throw invalid_input_error("base graph has no triangle");
  const long step = g.vertex_count() - 3;
  const std::uint64_t lam = laman_number(g).value();
  return detail::exact_glue_bound(lam, 2, (n - 3) / step, (n - 3) % step);
}

inline BigUint generalized_fan_bound(const SimpleGraph& g, const SimpleGraph& h_sub, long n) {
  detail::glue_copies(g, h_sub, 1);  // validates the base/subgraph pair
  const long w = h_sub.vertex_count();
  if (g.vertex_count() <= w) throw invalid_input_error("shared subgraph must be proper");
  if (n < w) throw invalid_input_error("target vertex count is below the shared subgraph");
  const long step = g.vertex_count() - w;
  const std::uint64_t lam_g = laman_number(g).value();
  const std::uint64_t lam_h = laman_number(h_sub).value();
  return detail::exact_glue_bound(lam_g, lam_h, (n - w) / step, (n - w) % step);
}

enum class ConstructionKind { caterpillar, fan, generalized_fan };

/// Per-vertex asymptotic base of the lower bound: the number of realizations
/// gained per added vertex, in the k -> infinity limit of the construction.
inline double growth_rate(ConstructionKind kind, const SimpleGraph& g,
                          const SimpleGraph* h_sub = nullptr) {
  switch (kind) {
    case ConstructionKind::caterpillar: {
      if (g.vertex_count() < 3) throw invalid_input_error("caterpillar rate needs at least 3 base vertices");
      double lam = static_cast<double>(laman_number(g).value());
      return std::pow(lam, 1.0 / (g.vertex_count() - 2));
    }
    case ConstructionKind::fan: {
      if (g.vertex_count() < 4) throw invalid_input_error("fan rate needs at least 4 base vertices");
      if (!detail::find_triangle(g)) throw invalid_input_error("base graph has no triangle");
      double lam = static_cast<double>(laman_number(g).value());
      return std::pow(lam / 2.0, 1.0 / (g.vertex_count() - 3));
    }
    case ConstructionKind::generalized_fan: {
      if (h_sub == nullptr) throw invalid_input_error("generalized fan rate needs a shared subgraph");
      detail::glue_copies(g, *h_sub, 1);
      if (g.vertex_count() <= h_sub->vertex_count()) {
        throw invalid_input_error("shared subgraph must be proper");
      }
      double lam_g = static_cast<double>(laman_number(g).value());
      double lam_h = static_cast<double>(laman_number(*h_sub).value());
      return std::pow(lam_g / lam_h, 1.0 / (g.vertex_count() - h_sub->vertex_count()));
    }
  }
  throw invalid_input_error("unknown construction kind");
}

struct UpperBounds {
  BigUint binom;
  BigUint mixedvol;
  std::optional<BigUint> degree2;
};

inline UpperBounds upper_bounds(const SimpleGraph& g) {
  if (!is_laman(g)) throw invalid_input_error("upper bounds apply to minimally rigid graphs");
  const std::uint64_t n = static_cast<std::uint64_t>(g.vertex_count());
  UpperBounds b;
  b.binom = BigUint::binomial(2 * n - 4, n - 2);
  b.mixedvol = BigUint::two_pow(2 * (n - 2));
  std::uint64_t k = 0;
  for (Vertex v : g.vertices()) {
    if (g.degree(v) == 2) ++k;
  }
  if (k >= 4) b.degree2 = BigUint::two_pow(2 * n - k - 4);
  return b;
}

struct Fixture {
  SimpleGraph graph;
  std::uint64_t expected;
};

using FixtureSet = std::map<std::string, Fixture>;

/// Bundled record graphs (largest known Laman numbers for n = 6..12) plus the
/// small base blocks used by the gluing constructions.
inline const FixtureSet& fixtures() {
  static const FixtureSet table = [] {
    FixtureSet t;
    auto add = [&](const char* name, std::vector<Edge> edges, std::uint64_t expected) {
      t.emplace(name, Fixture{SimpleGraph::from_edges(edges), expected});
    };
    add("triangle", {{0, 1}, {0, 2}, {1, 2}}, 2);
    add("h1", {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}, 4);
    add("h2", {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}, 8);
    add("h3", {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}, 24);
    add("f6", {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}, 24);
    add("f7",
        {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 5}, {2, 6}, {3, 4}, {3, 5}, {4, 6}, {5, 6}},
        56);
    add("f8",
        {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 6}, {1, 7}, {2, 4}, {3, 6}, {4, 7},
         {5, 6}, {5, 7}},
        136);
    add("f9",
        {{0, 1}, {0, 3}, {0, 4}, {0, 7}, {1, 5}, {1, 6}, {1, 8}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
         {3, 7}, {4, 8}, {5, 7}, {6, 8}},
        344);
    add("f10",
        {{0, 1}, {0, 4}, {0, 6}, {0, 7}, {1, 5}, {1, 8}, {1, 9}, {2, 4}, {2, 5}, {2, 6}, {2, 8},
         {3, 4}, {3, 5}, {3, 7}, {3, 9}, {6, 8}, {7, 9}},
        880);
    add("f11",
        {{0, 1}, {0, 5}, {0, 6}, {0, 9}, {1, 5}, {1, 7}, {1, 10}, {2, 3}, {2, 6}, {2, 8}, {2, 9},
         {3, 7}, {3, 8}, {3, 10}, {4, 5}, {4, 6}, {4, 7}, {4, 8}, {9, 10}},
        2288);
    add("f12",
        {{0, 1}, {0, 6}, {0, 7}, {0, 8}, {1, 9}, {1, 10}, {1, 11}, {2, 3}, {2, 6}, {2, 7}, {2, 9},
         {3, 8}, {3, 10}, {3, 11}, {4, 5}, {4, 6}, {4, 8}, {4, 10}, {5, 7}, {5, 9}, {5, 11}},
        6180);
    return t;
  }();
  return table;
}

}  // namespace laman
