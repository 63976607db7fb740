#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "wgd/graph.hpp"
#include "wgd/solver.hpp"

namespace wgd {

inline constexpr std::size_t kOracleMaxVertices = 24;

struct OracleResult {
  bool exists = false;
  // Stable split with the numerically smallest A-side bitmask.
  std::optional<Partition> witness;
  // Stable ordered pairs (A, B) over all 2^n - 2 splits.
  std::uint64_t count = 0;
};

struct OracleOptions {
  double tolerance = 0.0;
  // 0 picks a thread count from the hardware; small graphs stay serial.
  unsigned threads = 0;
};

// Bit x of `side_a_mask` set means x ∈ A.
bool is_stable_split(const WeightedGraph& g, const Demands& demands,
                     std::uint64_t side_a_mask, double tolerance = 0.0);

// Exhaustive search over every split; throws kTooLarge above 24 vertices.
OracleResult brute_force_solve(const WeightedGraph& g, const Demands& demands,
                               const OracleOptions& options = {});

struct InstanceSpec {
  std::size_t n = 8;
  double edge_probability = 0.5;
  double weight_min = 1.0;
  double weight_max = 1.0;
  std::uint64_t seed = 0;
  LoopMode loop_mode = LoopMode::kDouble;
  // Each vertex gets a loop with this probability, weight in the same range.
  double loop_probability = 0.0;
  std::size_t max_retries = 1000;
  // Fixed split fractions; drawn uniformly from [0, 1] when unset.
  std::optional<double> fixed_u;
  std::optional<double> fixed_v;
};

struct Instance {
  WeightedGraph graph;
  Demands demands;
};

// Samples G(n, p) with uniform weights until every vertex has
// s(x) = d(x) - 2W(x) + loop contribution >= 0, then sets a = u·s and
// b = v·(s - a). check_feasibility reports feasible on every result.
Instance random_feasible_instance(const InstanceSpec& spec);

}  // namespace wgd
