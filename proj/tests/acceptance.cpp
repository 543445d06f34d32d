// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails. Run it from the build tree via ctest or directly.
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "laman/bigraph.hpp"
#include "laman/canonical.hpp"
#include "laman/codecs.hpp"
#include "laman/constructions.hpp"
#include "laman/engine.hpp"
#include "laman/geometry.hpp"
#include "laman/graph.hpp"
#include "laman/sparsity.hpp"
#include "support.hpp"

namespace {

using laman::SimpleGraph;
using laman::Vertex;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string note;

  void fail(const std::string& why) {
    if (ok) {
      ok = false;
      note = why;
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v, int prec = 2) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(prec);
  s << v;
  return s.str();
}

std::uint64_t fresh_count(const SimpleGraph& g, const laman::EngineOptions& opts = {}) {
  laman::MemoTable<laman::LamanCount> memo;
  laman::ComputationStats st;
  return laman::laman_number(g, memo, st, opts).value();
}

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

Outcome record_counts() {
  Outcome c;
  const std::array<std::pair<const char*, std::uint64_t>, 7> records{{{"f6", 24},
                                                                      {"f7", 56},
                                                                      {"f8", 136},
                                                                      {"f9", 344},
                                                                      {"f10", 880},
                                                                      {"f11", 2288},
                                                                      {"f12", 6180}}};
  double total = 0;
  double f12_seconds = 0;
  for (const auto& [name, expected] : records) {
    auto t0 = Clock::now();
    std::uint64_t got = fresh_count(laman::fixtures().at(name).graph);
    double dt = seconds_since(t0);
    total += dt;
    if (std::string(name) == "f12") f12_seconds = dt;
    if (got != expected) {
      c.fail(std::string(name) + " returned " + std::to_string(got) + ", expected " +
             std::to_string(expected));
    }
  }
  if (total > 600) c.fail("total wall time " + fmt(total) + " s exceeds 600 s");
  if (f12_seconds > 120) c.fail("f12 took " + fmt(f12_seconds) + " s, limit 120 s");
  if (c.ok) {
    c.note = "24,56,136,344,880,2288,6180 exact; total " + fmt(total) + " s <= 600, f12 " +
             fmt(f12_seconds) + " s <= 120, single-threaded";
  }
  return c;
}

Outcome small_counts() {
  Outcome c;
  auto timed = [&](const char* name, std::uint64_t expected) {
    auto t0 = Clock::now();
    std::uint64_t got = fresh_count(laman::fixtures().at(name).graph);
    double dt = seconds_since(t0);
    if (got != expected) {
      c.fail(std::string(name) + " returned " + std::to_string(got));
    }
    if (dt > 0.010) c.fail(std::string(name) + " took " + fmt(dt * 1e3, 3) + " ms, limit 10 ms");
    return dt;
  };
  double t_tri = timed("triangle", 2);
  double t_h1 = timed("h1", 4);
  if (c.ok) {
    c.note = "triangle=2 in " + fmt(t_tri * 1e3, 3) + " ms, K4 minus edge=4 in " +
             fmt(t_h1 * 1e3, 3) + " ms; limit 10 ms each";
  }
  return c;
}

Outcome rate_table() {
  Outcome c;
  const std::array<const char*, 7> names{"f6", "f7", "f8", "f9", "f10", "f11", "f12"};
  const std::array<double, 7> caterpillar{2.21336, 2.23685, 2.26772, 2.30338,
                                          2.33378, 2.36196, 2.39386};
  const std::array<double, 6> fan{2.28943, 2.30033, 2.32542, 2.35824, 2.38581, 2.41159};
  auto check = [&](const char* name, laman::ConstructionKind kind, double expected) {
    double raw = laman::growth_rate(kind, laman::fixtures().at(name).graph);
    double rounded = std::llround(raw * 1e5) / 1e5;
    if (std::abs(rounded - expected) > 1e-5 + 1e-12) {
      c.fail(std::string(name) + " rate " + fmt(rounded, 5) + ", expected " + fmt(expected, 5));
    }
  };
  for (std::size_t i = 0; i < names.size(); ++i) {
    check(names[i], laman::ConstructionKind::caterpillar, caterpillar[i]);
  }
  // f12 has no triangle, so the fan family stops at f11.
  for (std::size_t i = 0; i + 1 < names.size(); ++i) {
    check(names[i], laman::ConstructionKind::fan, fan[i]);
  }
  if (c.ok) c.note = "13 rates within 1e-5 after rounding to 5 decimals";
  return c;
}

Outcome product_laws() {
  Outcome c;
  laman::MemoTable<laman::LamanCount> memo;
  laman::ComputationStats st;
  auto recount = [&](const SimpleGraph& g) { return laman::laman_number(g, memo, st).value(); };

  int checked = 0;
  auto expect = [&](const char* base, const char* kind, const SimpleGraph& glued,
                    std::uint64_t law) {
    if (glued.vertex_count() > 10) return;
    ++checked;
    std::uint64_t got = recount(glued);
    if (got != law) {
      c.fail(std::string(kind) + " over " + base + " counted " + std::to_string(got) +
             ", law says " + std::to_string(law));
    }
  };

  for (const char* name : {"triangle", "h1", "h2", "f6"}) {
    const SimpleGraph& g = laman::fixtures().at(name).graph;
    std::uint64_t lam = recount(g);
    laman::Edge e = g.edges().front();
    auto t = laman::detail::find_triangle(g);
    SimpleGraph edge_sub = SimpleGraph::from_edges({e});
    for (int k = 1; k <= 2; ++k) {
      expect(name, "caterpillar", laman::caterpillar(g, k, e), ipow(lam, k));
      expect(name, "gfan/edge", laman::generalized_fan(g, edge_sub, k), ipow(lam, k));
      if (t) {
        SimpleGraph tri_sub = SimpleGraph::from_edges(
            {laman::make_edge((*t)[0], (*t)[1]), laman::make_edge((*t)[0], (*t)[2]),
             laman::make_edge((*t)[1], (*t)[2])});
        expect(name, "fan", laman::fan(g, *t, k), 2 * ipow(lam / 2, k));
        expect(name, "gfan/triangle", laman::generalized_fan(g, tri_sub, k),
               2 * ipow(lam / 2, k));
      }
    }
  }
  if (checked < 24) c.fail("only " + std::to_string(checked) + " glued graphs fit the size cap");
  if (c.ok) c.note = std::to_string(checked) + " recounts equal the closed-form laws exactly";
  return c;
}

bool edge_choice_invariance() {
  for (const SimpleGraph& g : testsup::laman_classes_up_to(6)) {
    laman::Bigraph b = laman::bigraph_of(g);
    std::optional<std::uint64_t> first;
    for (laman::EdgeId root : b.biedges()) {
      laman::EngineOptions opts;
      opts.root_biedge = root;
      laman::MemoTable<laman::LamanCount> memo;
      laman::ComputationStats st;
      std::uint64_t v = laman::lam_bigraph(b, memo, st, opts).value();
      if (!first) {
        first = v;
      } else if (v != *first) {
        return false;
      }
    }
  }
  return true;
}

bool isomorphism_invariance(std::mt19937_64& rng) {
  for (const auto& [name, fx] : laman::fixtures()) {
    laman::MemoTable<laman::LamanCount> memo;
    laman::ComputationStats st;
    std::uint64_t base = laman::laman_number(fx.graph, memo, st).value();
    for (int i = 0; i < 100; ++i) {
      SimpleGraph h = testsup::relabel_randomly(rng, fx.graph);
      if (laman::laman_number(h, memo, st).value() != base) return false;
    }
  }
  return true;
}

bool henneberg_doubling(std::mt19937_64& rng, std::vector<SimpleGraph>& graphs,
                        std::vector<std::uint64_t>& counts) {
  laman::MemoTable<laman::LamanCount> memo;
  laman::ComputationStats st;
  for (int i = 0; i < 200; ++i) {
    int n = 3 + (i % 6);
    SimpleGraph g = testsup::random_laman(rng, n);
    std::uint64_t v = laman::laman_number(g, memo, st).value();
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    Vertex a = pick(rng);
    Vertex b = pick(rng);
    while (b == a) b = pick(rng);
    SimpleGraph grown = laman::henneberg1(g, a, b);
    if (laman::laman_number(grown, memo, st).value() != 2 * v) return false;
    graphs.push_back(g);
    counts.push_back(v);
  }
  return true;
}

bool upper_bound_dominance(const std::vector<SimpleGraph>& graphs,
                           const std::vector<std::uint64_t>& counts) {
  auto dominated = [](const SimpleGraph& g, std::uint64_t count) {
    laman::UpperBounds ub = laman::upper_bounds(g);
    laman::BigUint c(count);
    if (!(c <= ub.binom) || !(c <= ub.mixedvol)) return false;
    if (ub.degree2 && !(c <= *ub.degree2)) return false;
    return true;
  };
  for (const auto& [name, fx] : laman::fixtures()) {
    if (!dominated(fx.graph, fx.expected)) return false;
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (!dominated(graphs[i], counts[i])) return false;
  }
  return true;
}

bool pebble_matches_bruteforce() {
  long checked = 0;
  for (int n = 2; n <= 7; ++n) {
    const std::vector<laman::Edge> pairs = testsup::all_pairs(n);
    std::vector<Vertex> vs(n);
    std::iota(vs.begin(), vs.end(), 0);
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<laman::Edge> edges = testsup::edges_of_mask(pairs, mask);
      SimpleGraph g = SimpleGraph::from_edges(edges, vs);
      if (laman::is_laman(g) != testsup::is_laman_oracle(n, edges)) return false;
      ++checked;
    }
  }
  return checked == 2L + 8 + 64 + 1024 + 32768 + 2097152;
}

bool memo_on_off_equivalence() {
  for (const auto& [name, fx] : laman::fixtures()) {
    laman::EngineOptions off;
    off.use_memo = false;
    if (fresh_count(fx.graph) != fresh_count(fx.graph, off)) return false;
  }
  return true;
}

bool graph6_round_trip(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size(1, 40);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    int n = size(rng);
    std::vector<Vertex> vs(n);
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<laman::Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (coin(rng) < 0.25) edges.push_back({u, v});
      }
    }
    SimpleGraph g = SimpleGraph::from_edges(edges, vs);
    if (!(laman::parse_graph6(laman::write_graph6(g)) == g)) return false;
  }
  return true;
}

bool geometry_invariance(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto rand_c = [&] { return laman::Complex{u(rng), u(rng)}; };

  const SimpleGraph& g = laman::fixtures().at("f6").graph;
  laman::Realization rho;
  for (Vertex v : g.vertices()) rho.set(v, laman::CPoint{rand_c(), rand_c()});
  laman::Labeling lambda = laman::labeling_from_realization(g, rho);

  for (int i = 0; i < 100; ++i) {
    laman::Complex w{u(rng), 0.4 * u(rng)};
    laman::Complex cw = std::cos(w);
    laman::Complex sw = std::sin(w);
    laman::Complex b1 = rand_c();
    laman::Complex b2 = rand_c();
    laman::Realization moved;
    for (Vertex v : g.vertices()) {
      laman::CPoint p = rho.at(v);
      moved.set(v, laman::CPoint{cw * p.x - sw * p.y + b1, sw * p.x + cw * p.y + b2});
    }
    if (!laman::is_compatible(g, moved, lambda, 1e-9)) return false;
  }

  laman::PolynomialSystem sys = laman::export_system(g, lambda, g.vertices().front());
  if (sys.equations.size() != g.edges().size()) return false;
  return laman::system_residual(sys, g, rho) <= 1e-9;
}

Outcome property_suites() {
  Outcome c;
  std::mt19937_64 rng(20260816);
  std::vector<SimpleGraph> computed;
  std::vector<std::uint64_t> counts;

  struct Suite {
    const char* name;
    bool ok;
  };
  const Suite suites[] = {
      {"edge-choice invariance", edge_choice_invariance()},
      {"isomorphism invariance", isomorphism_invariance(rng)},
      {"henneberg doubling", henneberg_doubling(rng, computed, counts)},
      {"upper-bound dominance", upper_bound_dominance(computed, counts)},
      {"pebble vs brute force", pebble_matches_bruteforce()},
      {"memo on/off", memo_on_off_equivalence()},
      {"graph6 round trip", graph6_round_trip(rng)},
      {"geometry invariance", geometry_invariance(rng)},
  };
  int passed = 0;
  for (const Suite& s : suites) {
    if (s.ok) {
      ++passed;
    } else {
      c.fail(std::string(s.name) + " failed");
    }
  }
  if (c.ok) c.note = "all 8 suites hold (isometry tol 1e-9, exhaustive n<=7 sparsity sweep)";
  return c;
}

}  // namespace

int main() {
  bool all_ok = true;
  auto report = [&](int idx, const std::string& label, const Outcome& o) {
    all_ok = all_ok && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << idx << ": " << label;
    if (!o.note.empty()) std::cout << " (" << o.note << ")";
    std::cout << "\n" << std::flush;
  };

  report(1, "record counts f6..f12", record_counts());
  report(2, "small closed-form counts", small_counts());
  report(3, "growth rate table", rate_table());
  report(4, "construction product laws", product_laws());
  report(5, "property suites", property_suites());
  return all_ok ? 0 : 1;
}
