#pragma once

// Test-only reference implementations. Everything here is written from the
// definitions directly (subset enumeration, numerical integration) and never
// calls the peeling or solver code it is used to check.

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "wgd/error.hpp"
#include "wgd/graph.hpp"
#include "wgd/solver.hpp"

namespace wgd::testing {

template <class Fn>
std::optional<ErrorKind> error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline VertexSet set_of(std::size_t n, std::initializer_list<Vertex> xs) {
  VertexSet s(n);
  for (Vertex x : xs) s.insert(x);
  return s;
}

inline std::uint64_t mask_of(const VertexSet& s) {
  std::uint64_t m = 0;
  for (Vertex x : s.elements()) m |= std::uint64_t{1} << x;
  return m;
}

inline VertexSet set_of_mask(std::size_t n, std::uint64_t mask) {
  VertexSet s(n);
  for (Vertex x = 0; x < n; ++x) {
    if ((mask >> x) & 1u) s.insert(x);
  }
  return s;
}

inline double mask_degree(const WeightedGraph& g, std::uint64_t mask,
                          Vertex x) {
  return g.degree_within(x, [&](Vertex y) { return ((mask >> y) & 1u) != 0; });
}

// ∀x ∈ T: d_T(x) >= f(x).
inline bool satisfies(const WeightedGraph& g, std::uint64_t t,
                      const std::vector<double>& f) {
  for (Vertex x = 0; x < g.size(); ++x) {
    if (((t >> x) & 1u) && mask_degree(g, t, x) < f[x]) return false;
  }
  return true;
}

// Union of all subsets T ⊆ s with ∀x ∈ T: d_T(x) >= f(x).
inline std::uint64_t union_of_satisfying_subsets(const WeightedGraph& g,
                                                 std::uint64_t s,
                                                 const std::vector<double>& f) {
  std::uint64_t all = 0;
  for (std::uint64_t t = s; t != 0; t = (t - 1) & s) {
    if (satisfies(g, t, f)) all |= t;
  }
  return all;
}

// Definition: every non-empty T ⊆ s has x with d_T(x) < f(x) + W(x).
inline bool meager_by_definition(const WeightedGraph& g, std::uint64_t s,
                                 const std::vector<double>& f) {
  for (std::uint64_t t = s; t != 0; t = (t - 1) & s) {
    bool has_witness = false;
    for (Vertex x = 0; x < g.size() && !has_witness; ++x) {
      if ((t >> x) & 1u) {
        has_witness = mask_degree(g, t, x) < f[x] + g.max_weight(x);
      }
    }
    if (!has_witness) return false;
  }
  return true;
}

// Sizes of inclusion-minimal non-empty satisfying subsets of V.
inline std::vector<std::uint64_t> minimal_satisfying_subsets(
    const WeightedGraph& g, const std::vector<double>& a) {
  const std::uint64_t full = (std::uint64_t{1} << g.size()) - 1;
  std::vector<std::uint64_t> sat;
  for (std::uint64_t t = 1; t <= full; ++t) {
    if (satisfies(g, t, a)) sat.push_back(t);
  }
  std::vector<std::uint64_t> minimal;
  for (std::uint64_t t : sat) {
    bool has_smaller = false;
    for (std::uint64_t u : sat) {
      if (u != t && (u & t) == u) {
        has_smaller = true;
        break;
      }
    }
    if (!has_smaller) minimal.push_back(t);
  }
  return minimal;
}

inline bool stable_by_definition(const WeightedGraph& g, const Demands& d,
                                 const Partition& p) {
  std::uint64_t a = 0;
  for (Vertex x = 0; x < g.size(); ++x) {
    if (p.side(x) == Side::kA) a |= std::uint64_t{1} << x;
  }
  const std::uint64_t b = ((std::uint64_t{1} << g.size()) - 1) & ~a;
  for (Vertex x = 0; x < g.size(); ++x) {
    const bool in_a = (a >> x) & 1u;
    const double deg = mask_degree(g, in_a ? a : b, x);
    if (deg < (in_a ? d.a[x] : d.b[x])) return false;
  }
  return true;
}

inline WeightedGraph complete_graph(std::size_t n, double w = 1.0) {
  std::vector<IndexedEdge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, w});
  }
  return WeightedGraph(n, edges);
}

inline WeightedGraph triangle() { return complete_graph(3); }

inline WeightedGraph path3() {
  const std::vector<IndexedEdge> edges{{0, 1, 1.0}, {1, 2, 1.0}};
  return WeightedGraph(3, edges);
}

struct RandomGraphSpec {
  std::size_t n = 8;
  double p = 0.5;
  double w_min = 0.1;
  double w_max = 2.0;
  double loop_p = 0.0;
  LoopMode mode = LoopMode::kDouble;
};

inline WeightedGraph random_graph(const RandomGraphSpec& spec,
                                  std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> weight(spec.w_min, spec.w_max);
  std::vector<IndexedEdge> edges;
  for (Vertex u = 0; u < spec.n; ++u) {
    if (unit(rng) < spec.loop_p) edges.push_back({u, u, weight(rng)});
    for (Vertex v = u + 1; v < spec.n; ++v) {
      if (unit(rng) < spec.p) edges.push_back({u, v, weight(rng)});
    }
  }
  return WeightedGraph(spec.n, edges, spec.mode);
}

// Area of disk(0, r) ∩ unit square centred at (dx, dy) by tanh-sinh
// quadrature of the vertical chord length, split at every kink.
inline double quadrature_area(double dx, double dy, double r) {
  const double x0 = std::max(dx - 0.5, -r);
  const double x1 = std::min(dx + 0.5, r);
  if (x0 >= x1) return 0.0;
  const double y0 = dy - 0.5;
  const double y1 = dy + 0.5;
  auto chord = [&](double u) {
    const double h = std::sqrt(std::max(0.0, r * r - u * u));
    return std::max(0.0, std::min(y1, h) - std::max(y0, -h));
  };
  std::vector<double> cuts{x0, x1};
  for (double y : {y0, y1}) {
    if (std::abs(y) < r) {
      const double u = std::sqrt(r * r - y * y);
      for (double c : {-u, u}) {
        if (c > x0 && c < x1) cuts.push_back(c);
      }
    }
  }
  std::sort(cuts.begin(), cuts.end());
  boost::math::quadrature::tanh_sinh<double> integrator;
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    if (cuts[k + 1] - cuts[k] <= 0.0) continue;
    total += integrator.integrate(chord, cuts[k], cuts[k + 1], 1e-13);
  }
  return total;
}

}  // namespace wgd::testing
