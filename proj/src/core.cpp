#include "wgd/core.hpp"

#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "wgd/error.hpp"

namespace wgd {

namespace {

void check_threshold(const WeightedGraph& g, std::span<const double> f) {
  if (f.size() != g.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "threshold must have one entry per vertex");
  }
  for (double v : f) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "threshold entries must be finite and non-negative");
    }
  }
}

void check_universe(const WeightedGraph& g, const VertexSet& s) {
  if (s.universe() != g.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "vertex set universe does not match the graph");
  }
}

}  // namespace

VertexSet peel(const WeightedGraph& g, const VertexSet& s,
               std::span<const double> threshold, double tolerance) {
  check_threshold(g, threshold);
  check_universe(g, s);
  if (!(tolerance >= 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "tolerance must be >= 0");
  }

  VertexSet core = s;
  auto in_core = [&](Vertex y) { return core.contains(y); };
  auto bound = [&](Vertex x) { return threshold[x] - tolerance; };

  // Keyed by (degree - bound, vertex); only violators are queued.
  std::vector<double> degree(g.size(), 0.0);
  std::set<std::pair<double, Vertex>> violators;
  for (Vertex x : s.elements()) {
    degree[x] = g.degree_within(x, in_core);
    if (degree[x] < bound(x)) violators.emplace(degree[x] - bound(x), x);
  }

  while (!violators.empty()) {
    const Vertex x = violators.begin()->second;
    violators.erase(violators.begin());
    core.erase(x);
    for (const Neighbor& nb : g.neighbors(x)) {
      const Vertex y = nb.vertex;
      if (!core.contains(y)) continue;
      const double before = degree[y];
      if (before < bound(y)) violators.erase({before - bound(y), y});
      // Recomputed, not decremented, so the value matches induced_degree.
      degree[y] = g.degree_within(y, in_core);
      if (degree[y] < bound(y)) violators.emplace(degree[y] - bound(y), y);
    }
  }
  return core;
}

std::vector<double> with_max_weight(const WeightedGraph& g,
                                    std::span<const double> f) {
  check_threshold(g, f);
  std::vector<double> out(f.begin(), f.end());
  for (Vertex x = 0; x < g.size(); ++x) out[x] += g.max_weight(x);
  return out;
}

bool is_meager(const WeightedGraph& g, const VertexSet& s,
               std::span<const double> f, double tolerance) {
  return peel(g, s, with_max_weight(g, f), tolerance).empty();
}

VertexSet minimal_satisfying_set(const WeightedGraph& g,
                                 std::span<const double> a) {
  VertexSet current = peel(g, VertexSet::full(g.size()), a);
  if (current.empty()) {
    throw Error(ErrorKind::kNoSatisfyingSet,
                "no non-empty vertex set meets its demands");
  }
  // Cores are monotone in the vertex set, so a vertex whose deletion empties
  // the core keeps doing so after later shrinks. Restarting the scan would
  // reject the same prefix again; one ascending pass gives the same result.
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!current.contains(v)) continue;
    VertexSet without = current;
    without.erase(v);
    VertexSet core = peel(g, without, a);
    if (!core.empty()) current = std::move(core);
  }
  return current;
}

}  // namespace wgd
