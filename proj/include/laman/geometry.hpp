#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include <json.hpp>

#include "laman/errors.hpp"
#include "laman/graph.hpp"

namespace laman {

using Complex = std::complex<double>;

/// Point of the complex plane C^2. The relevant bilinear form is
/// <p,q> = p.x*q.x + p.y*q.y with no conjugation, so "squared length"
/// can be any complex number and is zero on isotropic directions.
struct CPoint {
  Complex x{0.0, 0.0};
  Complex y{0.0, 0.0};
};

inline Complex dot(const CPoint& p, const CPoint& q) { return p.x * q.x + p.y * q.y; }

inline CPoint operator-(const CPoint& p, const CPoint& q) { return {p.x - q.x, p.y - q.y}; }

/// Assignment of a squared edge length to every edge of a host graph.
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(std::map<Edge, Complex> values) : values_(std::move(values)) {}

  void set(Edge e, Complex value) { values_[e] = value; }

  Complex at(Edge e) const {
    auto it = values_.find(e);
    if (it == values_.end()) {
      throw invalid_input_error("labeling has no value for edge (" + std::to_string(e.first) +
                                "," + std::to_string(e.second) + ")");
    }
    return it->second;
  }

  bool covers(const SimpleGraph& g) const {
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return values_.count(e) > 0; });
  }

  const std::map<Edge, Complex>& values() const { return values_; }

  double max_magnitude() const {
    double best = 0.0;
    for (const auto& [e, v] : values_) best = std::max(best, std::abs(v));
    return best;
  }

 private:
  std::map<Edge, Complex> values_;
};

/// Placement of every vertex of a host graph in C^2.
class Realization {
 public:
  Realization() = default;
  explicit Realization(std::map<Vertex, CPoint> points) : points_(std::move(points)) {}

  void set(Vertex v, CPoint p) { points_[v] = p; }

  CPoint at(Vertex v) const {
    auto it = points_.find(v);
    if (it == points_.end()) {
      throw invalid_input_error("realization has no point for vertex " + std::to_string(v));
    }
    return it->second;
  }

  bool covers(const SimpleGraph& g) const {
    return std::all_of(g.vertices().begin(), g.vertices().end(),
                       [&](Vertex v) { return points_.count(v) > 0; });
  }

  const std::map<Vertex, CPoint>& points() const { return points_; }

 private:
  std::map<Vertex, CPoint> points_;
};

/// Orientation-preserving isometry of C^2 for the bilinear form above:
/// p -> A p + b with A = [[c, -s], [s, c]] and c^2 + s^2 = 1.
struct DirectIsometry {
  Complex c{1.0, 0.0};
  Complex s{0.0, 0.0};
  CPoint b;

  CPoint apply(const CPoint& p) const {
    return {c * p.x - s * p.y + b.x, s * p.x + c * p.y + b.y};
  }
};

inline Labeling labeling_from_realization(const SimpleGraph& g, const Realization& rho) {
  std::map<Edge, Complex> values;
  for (const auto& e : g.edges()) {
    CPoint d = rho.at(e.second) - rho.at(e.first);
    values[e] = dot(d, d);
  }
  return Labeling(std::move(values));
}

inline bool is_compatible(const SimpleGraph& g, const Realization& rho, const Labeling& lambda,
                          double tol = 1e-9) {
  for (const auto& e : g.edges()) {
    CPoint d = rho.at(e.second) - rho.at(e.first);
    if (std::abs(dot(d, d) - lambda.at(e)) > tol) return false;
  }
  return true;
}

/// Tests whether rho2 = iso(rho1) for some direct isometry and returns the
/// witness. The isometry is pinned down by one vertex pair whose difference
/// vector is non-isotropic under rho1; if every pair is isotropic the
/// realizations are too degenerate to compare.
inline std::optional<DirectIsometry> are_equivalent(const SimpleGraph& g, const Realization& rho1,
                                                    const Realization& rho2, double tol = 1e-9) {
  const auto& verts = g.vertices();
  if (verts.size() < 2) throw invalid_input_error("equivalence needs at least two vertices");

  Vertex pu = -1, pv = -1;
  Complex norm;
  for (std::size_t i = 0; i < verts.size() && pu < 0; ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      CPoint d = rho1.at(verts[j]) - rho1.at(verts[i]);
      Complex dd = dot(d, d);
      if (std::abs(dd) > tol) {
        pu = verts[i];
        pv = verts[j];
        norm = dd;
        break;
      }
    }
  }
  if (pu < 0) {
    throw degenerate_input_error("all vertex pairs are isotropic; no pivot direction exists");
  }

  CPoint d = rho1.at(pv) - rho1.at(pu);
  CPoint e = rho2.at(pv) - rho2.at(pu);
  DirectIsometry iso;
  iso.c = (e.x * d.x + e.y * d.y) / norm;
  iso.s = (e.y * d.x - e.x * d.y) / norm;
  if (std::abs(iso.c * iso.c + iso.s * iso.s - Complex{1.0, 0.0}) > tol) return std::nullopt;
  CPoint p = rho1.at(pu);
  CPoint q = rho2.at(pu);
  iso.b = {q.x - (iso.c * p.x - iso.s * p.y), q.y - (iso.s * p.x + iso.c * p.y)};

  for (Vertex v : verts) {
    CPoint mapped = iso.apply(rho1.at(v));
    CPoint target = rho2.at(v);
    if (std::abs(mapped.x - target.x) > tol || std::abs(mapped.y - target.y) > tol) {
      return std::nullopt;
    }
  }
  return iso;
}

/// Quadratic system whose solutions are the realizations with the given
/// squared edge lengths, modulo translations (one vertex pinned at the
/// origin). Unknowns are x_v, y_v for every other vertex.
struct PolynomialSystem {
  struct Equation {
    Edge edge;
    std::string lhs_x;
    std::string lhs_y;
    Complex rhs;
  };

  std::vector<std::string> unknowns;
  Vertex pinned = 0;
  std::vector<Equation> equations;

  nlohmann::json to_json() const {
    nlohmann::json eqs = nlohmann::json::array();
    for (const auto& eq : equations) {
      eqs.push_back({{"edge", {eq.edge.first, eq.edge.second}},
                     {"lhs", {eq.lhs_x, eq.lhs_y}},
                     {"rhs", {{"re", eq.rhs.real()}, {"im", eq.rhs.imag()}}}});
    }
    return {{"unknowns", unknowns}, {"pinned", pinned}, {"equations", eqs}};
  }
};

inline PolynomialSystem export_system(const SimpleGraph& g, const Labeling& lambda, Vertex pin) {
  if (!g.has_vertex(pin)) throw invalid_input_error("pinned vertex is not in the graph");
  if (!lambda.covers(g)) throw invalid_input_error("labeling does not cover every edge");

  if (g.vertex_count() > 1) {
    std::map<Vertex, bool> seen;
    std::queue<Vertex> frontier;
    seen[pin] = true;
    frontier.push(pin);
    std::multimap<Vertex, Vertex> adj;
    for (const auto& [u, v] : g.edges()) {
      adj.insert({u, v});
      adj.insert({v, u});
    }
    while (!frontier.empty()) {
      Vertex u = frontier.front();
      frontier.pop();
      auto [lo, hi] = adj.equal_range(u);
      for (auto it = lo; it != hi; ++it) {
        if (!seen[it->second]) {
          seen[it->second] = true;
          frontier.push(it->second);
        }
      }
    }
    for (Vertex v : g.vertices()) {
      if (!seen[v]) throw invalid_input_error("graph is disconnected; pinning cannot remove all translations");
    }
  }

  PolynomialSystem sys;
  sys.pinned = pin;
  for (Vertex v : g.vertices()) {
    if (v == pin) continue;
    sys.unknowns.push_back("x_" + std::to_string(v));
    sys.unknowns.push_back("y_" + std::to_string(v));
  }
  for (const auto& e : g.edges()) {
    auto [u, v] = e;
    PolynomialSystem::Equation eq;
    eq.edge = e;
    if (u == pin) {
      eq.lhs_x = "x_" + std::to_string(v);
      eq.lhs_y = "y_" + std::to_string(v);
    } else if (v == pin) {
      eq.lhs_x = "x_" + std::to_string(u);
      eq.lhs_y = "y_" + std::to_string(u);
    } else {
      eq.lhs_x = "x_" + std::to_string(u) + " - x_" + std::to_string(v);
      eq.lhs_y = "y_" + std::to_string(u) + " - y_" + std::to_string(v);
    }
    eq.rhs = lambda.at(e);
    sys.equations.push_back(eq);
  }
  return sys;
}

/// Evaluates the exported system at a realization: residual of each equation,
/// used to confirm that export and evaluation agree.
inline double system_residual(const PolynomialSystem& sys, const SimpleGraph& g,
                              const Realization& rho) {
  CPoint origin = rho.at(sys.pinned);
  double worst = 0.0;
  for (const auto& eq : sys.equations) {
    auto [u, v] = eq.edge;
    CPoint pu = rho.at(u) - origin;
    CPoint pv = rho.at(v) - origin;
    CPoint d = (u == sys.pinned || v == sys.pinned) ? (u == sys.pinned ? pv : pu) : CPoint{pu.x - pv.x, pu.y - pv.y};
    worst = std::max(worst, std::abs(dot(d, d) - eq.rhs));
  }
  return worst;
}

}  // namespace laman
