#pragma once

#include <span>
#include <vector>

#include "wgd/graph.hpp"

namespace wgd {

// Largest T ⊆ s with induced_degree(g, T, x) >= threshold[x] - tolerance for
// every x in T. Vertices are deleted most-violated first (ties to the
// smaller index); the resulting set does not depend on that order.
VertexSet peel(const WeightedGraph& g, const VertexSet& s,
               std::span<const double> threshold, double tolerance = 0.0);

// f(x) + W_G(x) for every vertex. W is always taken in g itself, never in
// a subgraph.
std::vector<double> with_max_weight(const WeightedGraph& g,
                                    std::span<const double> f);

// True iff every non-empty T ⊆ s has some x with d_T(x) < f(x) + W_G(x),
// i.e. the (f + W)-core of s is empty.
bool is_meager(const WeightedGraph& g, const VertexSet& s,
               std::span<const double> f, double tolerance = 0.0);

// A non-empty A with d_A(x) >= a(x) on A such that no proper non-empty
// subset of A has the same property. Starts from the a-core of V and keeps
// shrinking it: scanning members in ascending order, the first v whose
// removal leaves a non-empty core replaces A by that core and the scan
// restarts. Throws kNoSatisfyingSet when the a-core of V is empty.
VertexSet minimal_satisfying_set(const WeightedGraph& g,
                                 std::span<const double> a);

}  // namespace wgd
