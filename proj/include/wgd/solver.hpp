#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "wgd/graph.hpp"

namespace wgd {

enum class Side : std::uint8_t { kA, kB };

std::string_view to_string(Side side) noexcept;

inline Side other(Side side) noexcept {
  return side == Side::kA ? Side::kB : Side::kA;
}

// Two disjoint non-empty sides covering every vertex.
class Partition {
 public:
  // Throws kPartitionCollapse if either side is empty.
  explicit Partition(std::vector<Side> sides);

  // Side A is `a`, side B its complement.
  static Partition from_side_a(const VertexSet& a);

  std::size_t size() const noexcept { return sides_.size(); }
  Side side(Vertex x) const { return sides_.at(x); }
  const std::vector<Side>& sides() const noexcept { return sides_; }

  VertexSet set(Side side) const;
  VertexSet set_a() const { return set(Side::kA); }
  VertexSet set_b() const { return set(Side::kB); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<Side> sides_;
};

struct StablePair {
  VertexSet a;
  VertexSet b;
};

// Per-vertex d_G - a - b - 2W + loop contribution. Non-negative everywhere
// iff the decomposition is guaranteed to exist.
struct FeasibilityReport {
  std::vector<double> slack;
  std::vector<Vertex> violators;

  bool feasible() const noexcept { return violators.empty(); }
};

FeasibilityReport check_feasibility(const WeightedGraph& g,
                                    const Demands& demands);

// kUnordered adds each internal edge once, which makes the exchange identity
// h(A',B') - h(A,B) = d_A'(y) - d_B(y) + b(y) - a(y) exact. kOrderedPairs is
// the literal double sum over ordered pairs (every edge twice).
enum class EdgeCounting { kUnordered, kOrderedPairs };

// Σ internal edge weights of both sides + Σ_{x∈A} b(x) + Σ_{x∈B} a(x).
// A loop is one edge, counted once under either convention.
double h_value(const WeightedGraph& g, const Partition& partition,
               const Demands& demands,
               EdgeCounting counting = EdgeCounting::kUnordered);

enum class Phase { kFeasibility, kMinimalSet, kCase1Core, kHillClimb, kCompletion };

std::string_view to_string(Phase phase) noexcept;

struct Move {
  Vertex vertex;
  Side from;
  Side to;
  double h_before;
  double h_after;
  // d_new(v) - d_old(v) + demand swap, evaluated before the move.
  double delta;
};

struct SolveCertificate {
  std::vector<Phase> phase_log;
  std::vector<Move> moves;
  std::vector<double> h_trace;
  std::optional<StablePair> stable_pair;
  // Side A of the meager partition the hill-climb started from.
  std::optional<VertexSet> hill_climb_start;
  // Same-side degree minus demand for each vertex of the final partition.
  std::vector<double> verification;
  FeasibilityReport feasibility;
  // Present when loops were stripped before solving.
  std::optional<FeasibilityReport> reduced_feasibility;
  std::vector<Vertex> isolated;
};

struct SolveOptions {
  std::size_t max_moves = 1'000'000;
  // Re-checks that both sides stay meager at every hill-climb step.
  bool check_invariants = false;
};

struct StablePairResult {
  StablePair pair;
  SolveCertificate certificate;
};

// Requires n >= 2 and no vertex of degree 0.
StablePairResult find_stable_pair(const WeightedGraph& g,
                                  const Demands& demands,
                                  const SolveOptions& options = {});

// Extends a stable pair to a stable partition. The uncovered vertices join
// B unless one of them would miss its b-demand there, in which case it moves
// to A first.
Partition complete_pair(const WeightedGraph& g, const Demands& demands,
                        const StablePair& pair);

struct Violation {
  Vertex vertex;
  Side side;
  double degree;
  double demand;
};

std::vector<Violation> verify_partition(const WeightedGraph& g,
                                        const Demands& demands,
                                        const Partition& partition,
                                        double tolerance = 0.0);

std::vector<double> side_slack(const WeightedGraph& g, const Demands& demands,
                               const Partition& partition);

struct SolveResult {
  Partition partition;
  SolveCertificate certificate;
};

// Runs on any input; the returned partition always verifies exactly against
// (g, demands). Graphs with loops are solved through reduce_loops.
SolveResult solve(const WeightedGraph& g, const Demands& demands,
                  const SolveOptions& options = {});

struct ReducedInstance {
  WeightedGraph graph;
  Demands demands;
  // Degree bound checked on the loopless graph.
  FeasibilityReport precondition;
};

// Drops loops and lowers each demand by the loop's degree contribution
// (clamped at 0). Stability on the result implies stability on the input.
ReducedInstance reduce_loops(const WeightedGraph& g, const Demands& demands);

}  // namespace wgd
