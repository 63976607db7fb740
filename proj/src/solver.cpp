#include "wgd/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "wgd/core.hpp"
#include "wgd/error.hpp"

namespace wgd {

std::string_view to_string(Side side) noexcept {
  return side == Side::kA ? "A" : "B";
}

std::string_view to_string(Phase phase) noexcept {
  switch (phase) {
    case Phase::kFeasibility: return "FEASIBILITY";
    case Phase::kMinimalSet: return "MINIMAL_SET";
    case Phase::kCase1Core: return "CASE1_CORE";
    case Phase::kHillClimb: return "HILLCLIMB";
    case Phase::kCompletion: return "COMPLETION";
  }
  return "UNKNOWN";
}

// ── Partition ──────────────────────────────────────────────────────────

Partition::Partition(std::vector<Side> sides) : sides_(std::move(sides)) {
  const auto in_a = std::count(sides_.begin(), sides_.end(), Side::kA);
  if (in_a == 0 || static_cast<std::size_t>(in_a) == sides_.size()) {
    throw Error(ErrorKind::kPartitionCollapse,
                "both sides of a partition must be non-empty");
  }
}

Partition Partition::from_side_a(const VertexSet& a) {
  std::vector<Side> sides(a.universe(), Side::kB);
  for (Vertex x : a.elements()) sides[x] = Side::kA;
  return Partition(std::move(sides));
}

VertexSet Partition::set(Side side) const {
  VertexSet out(sides_.size());
  for (Vertex x = 0; x < sides_.size(); ++x) {
    if (sides_[x] == side) out.insert(x);
  }
  return out;
}

// ── feasibility and potential ──────────────────────────────────────────

FeasibilityReport check_feasibility(const WeightedGraph& g,
                                    const Demands& demands) {
  demands.validate(g.size());
  FeasibilityReport report;
  report.slack.resize(g.size());
  for (Vertex x = 0; x < g.size(); ++x) {
    report.slack[x] = g.degree(x) - demands.a[x] - demands.b[x] -
                      2.0 * g.max_weight(x) + g.loop_contribution(x);
    if (report.slack[x] < 0.0) report.violators.push_back(x);
  }
  return report;
}

double h_value(const WeightedGraph& g, const Partition& partition,
               const Demands& demands, EdgeCounting counting) {
  demands.validate(g.size());
  if (partition.size() != g.size()) {
    throw Error(ErrorKind::kInvalidArgument, "partition size mismatch");
  }
  const double factor = counting == EdgeCounting::kOrderedPairs ? 2.0 : 1.0;
  double h = 0.0;
  for (Vertex x = 0; x < g.size(); ++x) {
    const Side side = partition.side(x);
    h += g.loop_weight(x);
    for (const Neighbor& nb : g.neighbors(x)) {
      if (nb.vertex > x && partition.side(nb.vertex) == side) {
        h += factor * nb.weight;
      }
    }
    h += side == Side::kA ? demands.b[x] : demands.a[x];
  }
  return h;
}

// ── stable pair search ─────────────────────────────────────────────────

namespace {

struct Candidate {
  Vertex vertex;
  Side from;
  double delta;
};

// The most violated witness on side `from`: d_from(y) < from_bound(y). The
// move's Δh is d_{to+y}(y) - d_from(y) + from_demand(y) - to_demand(y).
std::optional<Candidate> pick_witness(const WeightedGraph& g,
                                      const VertexSet& from,
                                      const VertexSet& to, Side from_side,
                                      std::span<const double> from_bound,
                                      std::span<const double> from_demand,
                                      std::span<const double> to_demand) {
  std::optional<Candidate> best;
  double best_margin = 0.0;
  for (Vertex y : from.elements()) {
    const double d_from = induced_degree(g, from, y);
    if (!(d_from < from_bound[y])) continue;
    const double margin = from_bound[y] - d_from;
    if (best && !(margin > best_margin)) continue;
    const double d_to = g.degree_within(
        y, [&](Vertex z) { return z == y || to.contains(z); });
    best = Candidate{y, from_side,
                     d_to - d_from + from_demand[y] - to_demand[y]};
    best_margin = margin;
  }
  return best;
}

}  // namespace

StablePairResult find_stable_pair(const WeightedGraph& g,
                                  const Demands& demands,
                                  const SolveOptions& options) {
  const std::size_t n = g.size();
  if (n < 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "stable pair search needs at least two vertices");
  }
  demands.validate(n);
  for (Vertex x = 0; x < n; ++x) {
    if (g.degree(x) == 0.0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "vertex " + g.label(x) + " is isolated; remove it first");
    }
  }

  StablePairResult result;
  SolveCertificate& cert = result.certificate;

  VertexSet side_a = minimal_satisfying_set(g, demands.a);
  cert.phase_log.push_back(Phase::kMinimalSet);
  VertexSet side_b = side_a.complement();
  if (side_b.empty()) {
    throw Error(ErrorKind::kPartitionCollapse,
                "the minimal a-satisfying set covers every vertex");
  }

  const std::vector<double> a_bound = with_max_weight(g, demands.a);
  const std::vector<double> b_bound = with_max_weight(g, demands.b);

  cert.phase_log.push_back(Phase::kCase1Core);
  VertexSet strong_b = peel(g, side_b, b_bound);
  if (!strong_b.empty()) {
    result.pair = {std::move(side_a), std::move(strong_b)};
    cert.stable_pair = result.pair;
    return result;
  }

  // (side_a, side_b) is now a meager partition.
  cert.phase_log.push_back(Phase::kHillClimb);
  cert.hill_climb_start = side_a;
  double h = h_value(g, Partition::from_side_a(side_a), demands);
  cert.h_trace.push_back(h);

  for (;;) {
    if (options.check_invariants &&
        (!is_meager(g, side_a, demands.a) || !is_meager(g, side_b, demands.b))) {
      throw std::logic_error("hill-climb left the set of meager partitions");
    }
    VertexSet core_a = peel(g, side_a, demands.a);
    VertexSet core_b = peel(g, side_b, demands.b);
    if (!core_a.empty() && !core_b.empty()) {
      result.pair = {std::move(core_a), std::move(core_b)};
      cert.stable_pair = result.pair;
      return result;
    }
    if (cert.moves.size() >= options.max_moves) {
      throw Error(ErrorKind::kMoveLimitExceeded,
                  "no stable pair after " + std::to_string(options.max_moves) +
                      " moves");
    }

    std::optional<Candidate> move;
    if (core_a.empty()) {
      move = pick_witness(g, side_b, side_a, Side::kB, b_bound, demands.b,
                          demands.a);
    }
    if (core_b.empty()) {
      auto from_a = pick_witness(g, side_a, side_b, Side::kA, a_bound,
                                 demands.a, demands.b);
      if (from_a && (!move || from_a->delta > move->delta)) move = from_a;
    }
    if (!move) {
      throw Error(ErrorKind::kNonImprovingMove,
                  "no witness vertex on a side without a core");
    }

    VertexSet& from = move->from == Side::kA ? side_a : side_b;
    VertexSet& to = move->from == Side::kA ? side_b : side_a;
    if (from.size() == 1) {
      throw Error(ErrorKind::kPartitionCollapse,
                  "moving " + g.label(move->vertex) + " would empty side " +
                      std::string(to_string(move->from)));
    }
    if (!(move->delta > 0.0)) {
      throw Error(ErrorKind::kNonImprovingMove,
                  "moving " + g.label(move->vertex) +
                      " does not increase the potential");
    }
    from.erase(move->vertex);
    to.insert(move->vertex);
    const double h_after = h_value(g, Partition::from_side_a(side_a), demands);
    cert.moves.push_back({move->vertex, move->from, other(move->from), h,
                          h_after, move->delta});
    cert.h_trace.push_back(h_after);
    h = h_after;
  }
}

// ── completion and verification ────────────────────────────────────────

Partition complete_pair(const WeightedGraph& g, const Demands& demands,
                        const StablePair& pair) {
  const std::size_t n = g.size();
  demands.validate(n);
  if (pair.a.universe() != n || pair.b.universe() != n || pair.a.empty() ||
      pair.b.empty() || pair.a.intersects(pair.b)) {
    throw Error(ErrorKind::kInvalidArgument,
                "a stable pair needs two disjoint non-empty sets");
  }
  for (Vertex x : pair.a.elements()) {
    if (induced_degree(g, pair.a, x) < demands.a[x]) {
      throw Error(ErrorKind::kInvalidArgument, "pair side A is not stable");
    }
  }
  for (Vertex x : pair.b.elements()) {
    if (induced_degree(g, pair.b, x) < demands.b[x]) {
      throw Error(ErrorKind::kInvalidArgument, "pair side B is not stable");
    }
  }

  VertexSet side_a = pair.a;
  VertexSet side_b = pair.a.complement();  // B̄ ∪ C
  VertexSet uncovered = side_b;
  for (Vertex x : pair.b.elements()) uncovered.erase(x);

  for (;;) {
    std::optional<Vertex> short_of_b;
    for (Vertex x : uncovered.elements()) {
      if (induced_degree(g, side_b, x) < demands.b[x]) {
        short_of_b = x;
        break;
      }
    }
    if (!short_of_b) break;
    const Vertex x = *short_of_b;
    side_a.insert(x);
    if (induced_degree(g, side_a, x) < demands.a[x]) {
      throw Error(ErrorKind::kCompletionAssertFailed,
                  "vertex " + g.label(x) + " meets neither demand");
    }
    side_b.erase(x);
    uncovered.erase(x);
  }
  return Partition::from_side_a(side_a);
}

std::vector<Violation> verify_partition(const WeightedGraph& g,
                                        const Demands& demands,
                                        const Partition& partition,
                                        double tolerance) {
  demands.validate(g.size());
  if (partition.size() != g.size()) {
    throw Error(ErrorKind::kInvalidArgument, "partition size mismatch");
  }
  const VertexSet side_a = partition.set_a();
  const VertexSet side_b = partition.set_b();
  std::vector<Violation> out;
  for (Vertex x = 0; x < g.size(); ++x) {
    const Side side = partition.side(x);
    const double degree =
        induced_degree(g, side == Side::kA ? side_a : side_b, x);
    const double demand = side == Side::kA ? demands.a[x] : demands.b[x];
    if (degree < demand - tolerance) out.push_back({x, side, degree, demand});
  }
  return out;
}

std::vector<double> side_slack(const WeightedGraph& g, const Demands& demands,
                               const Partition& partition) {
  const VertexSet side_a = partition.set_a();
  const VertexSet side_b = partition.set_b();
  std::vector<double> out(g.size());
  for (Vertex x = 0; x < g.size(); ++x) {
    out[x] = partition.side(x) == Side::kA
                 ? induced_degree(g, side_a, x) - demands.a[x]
                 : induced_degree(g, side_b, x) - demands.b[x];
  }
  return out;
}

// ── loops and the full pipeline ────────────────────────────────────────

ReducedInstance reduce_loops(const WeightedGraph& g, const Demands& demands) {
  demands.validate(g.size());
  ReducedInstance out{without_loops(g), demands, {}};
  for (Vertex x = 0; x < g.size(); ++x) {
    const double c = g.loop_contribution(x);
    if (c == 0.0) continue;
    out.demands.a[x] = std::max(0.0, demands.a[x] - c);
    out.demands.b[x] = std::max(0.0, demands.b[x] - c);
  }
  out.precondition = check_feasibility(out.graph, out.demands);
  return out;
}

SolveResult solve(const WeightedGraph& g, const Demands& demands,
                  const SolveOptions& options) {
  const std::size_t n = g.size();
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "graph is empty");
  if (n == 1) {
    throw Error(ErrorKind::kSingleVertexGraph,
                "a single vertex admits no partition");
  }
  demands.validate(n);

  SolveCertificate cert;
  cert.feasibility = check_feasibility(g, demands);
  cert.phase_log.push_back(Phase::kFeasibility);

  std::optional<ReducedInstance> reduced;
  if (g.has_loops()) {
    reduced = reduce_loops(g, demands);
    cert.reduced_feasibility = reduced->precondition;
  }
  const WeightedGraph& work = reduced ? reduced->graph : g;
  const Demands& work_demands = reduced ? reduced->demands : demands;

  VertexSet active(n);
  for (Vertex x = 0; x < n; ++x) {
    if (work.degree(x) > 0.0) {
      active.insert(x);
    } else {
      cert.isolated.push_back(x);
    }
  }

  std::vector<Side> sides(n, Side::kB);
  if (active.empty()) {
    sides[0] = Side::kA;
  } else {
    const Subgraph sub = induced_subgraph(work, active);
    Demands sub_demands;
    for (Vertex x : sub.original) {
      sub_demands.a.push_back(work_demands.a[x]);
      sub_demands.b.push_back(work_demands.b[x]);
    }
    StablePairResult found = find_stable_pair(sub.graph, sub_demands, options);
    const Partition inner = complete_pair(sub.graph, sub_demands, found.pair);

    auto lift = [&](const VertexSet& s) {
      VertexSet out(n);
      for (Vertex i : s.elements()) out.insert(sub.original[i]);
      return out;
    };
    SolveCertificate& local = found.certificate;
    cert.phase_log.insert(cert.phase_log.end(), local.phase_log.begin(),
                          local.phase_log.end());
    cert.phase_log.push_back(Phase::kCompletion);
    for (Move m : local.moves) {
      m.vertex = sub.original[m.vertex];
      cert.moves.push_back(m);
    }
    cert.h_trace = std::move(local.h_trace);
    cert.stable_pair = StablePair{lift(found.pair.a), lift(found.pair.b)};
    if (local.hill_climb_start) {
      cert.hill_climb_start = lift(*local.hill_climb_start);
    }

    for (Vertex i = 0; i < sub.original.size(); ++i) {
      sides[sub.original[i]] = inner.side(i);
    }
    // Isolated vertices change no other vertex's induced degree.
    for (Vertex x : cert.isolated) {
      sides[x] = demands.a[x] == 0.0 || demands.b[x] != 0.0 ? Side::kA
                                                             : Side::kB;
    }
  }

  Partition partition(std::move(sides));
  const auto violations = verify_partition(g, demands, partition);
  if (!violations.empty()) {
    throw Error(ErrorKind::kVerificationFailed,
                std::to_string(violations.size()) +
                    " vertices miss their demand; first is " +
                    g.label(violations.front().vertex));
  }
  cert.verification = side_slack(g, demands, partition);
  return {std::move(partition), std::move(cert)};
}

}  // namespace wgd
