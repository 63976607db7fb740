#include "wgd/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "wgd/error.hpp"

namespace wgd {

bool is_stable_split(const WeightedGraph& g, const Demands& demands,
                     std::uint64_t side_a_mask, double tolerance) {
  for (Vertex x = 0; x < g.size(); ++x) {
    const bool in_a = ((side_a_mask >> x) & 1u) != 0;
    const double degree = g.degree_within(x, [&](Vertex y) {
      return (((side_a_mask >> y) & 1u) != 0) == in_a;
    });
    const double demand = in_a ? demands.a[x] : demands.b[x];
    if (degree < demand - tolerance) return false;
  }
  return true;
}

namespace {

struct Tally {
  std::uint64_t count = 0;
  std::uint64_t first = std::numeric_limits<std::uint64_t>::max();
};

Tally scan(const WeightedGraph& g, const Demands& demands, double tolerance,
           std::uint64_t begin, std::uint64_t end) {
  Tally t;
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    if (is_stable_split(g, demands, mask, tolerance)) {
      if (t.count == 0) t.first = mask;
      ++t.count;
    }
  }
  return t;
}

}  // namespace

OracleResult brute_force_solve(const WeightedGraph& g, const Demands& demands,
                               const OracleOptions& options) {
  const std::size_t n = g.size();
  if (n > kOracleMaxVertices) {
    throw Error(ErrorKind::kTooLarge,
                "exhaustive search is capped at " +
                    std::to_string(kOracleMaxVertices) + " vertices");
  }
  demands.validate(n);
  OracleResult result;
  if (n < 2) return result;

  // Masks 1 .. 2^n - 2: both sides non-empty.
  const std::uint64_t begin = 1;
  const std::uint64_t end = (std::uint64_t{1} << n) - 1;

  unsigned threads = options.threads;
  if (threads == 0) {
    threads = n < 14 ? 1u : std::max(1u, std::thread::hardware_concurrency());
  }
  const std::uint64_t span = end - begin;
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, std::max<std::uint64_t>(span, 1)));

  std::vector<Tally> tallies(threads);
  if (threads == 1) {
    tallies[0] = scan(g, demands, options.tolerance, begin, end);
  } else {
    std::vector<std::jthread> workers;
    const std::uint64_t chunk = (span + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t lo = begin + t * chunk;
      const std::uint64_t hi = std::min(end, lo + chunk);
      workers.emplace_back([&, t, lo, hi] {
        if (lo < hi) tallies[t] = scan(g, demands, options.tolerance, lo, hi);
      });
    }
  }

  std::uint64_t first = std::numeric_limits<std::uint64_t>::max();
  for (const Tally& t : tallies) {
    result.count += t.count;
    first = std::min(first, t.first);
  }
  result.exists = result.count > 0;
  if (result.exists) {
    std::vector<Side> sides(n, Side::kB);
    for (Vertex x = 0; x < n; ++x) {
      if ((first >> x) & 1u) sides[x] = Side::kA;
    }
    result.witness = Partition(std::move(sides));
  }
  return result;
}

Instance random_feasible_instance(const InstanceSpec& spec) {
  if (spec.n < 2) {
    throw Error(ErrorKind::kInvalidArgument, "instance needs n >= 2");
  }
  if (!(spec.weight_min > 0.0) || !(spec.weight_max >= spec.weight_min) ||
      !std::isfinite(spec.weight_max)) {
    throw Error(ErrorKind::kInvalidArgument,
                "weight range must be positive and ordered");
  }
  if (!(spec.edge_probability >= 0.0 && spec.edge_probability <= 1.0) ||
      !(spec.loop_probability >= 0.0 && spec.loop_probability <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "probabilities must be in [0, 1]");
  }

  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto draw_weight = [&] {
    if (spec.weight_min == spec.weight_max) return spec.weight_min;
    return std::uniform_real_distribution<double>(spec.weight_min,
                                                  spec.weight_max)(rng);
  };

  for (std::size_t attempt = 0; attempt < spec.max_retries; ++attempt) {
    std::vector<IndexedEdge> edges;
    for (Vertex u = 0; u < spec.n; ++u) {
      if (spec.loop_probability > 0.0 && unit(rng) < spec.loop_probability) {
        edges.push_back({u, u, draw_weight()});
      }
      for (Vertex v = u + 1; v < spec.n; ++v) {
        if (unit(rng) < spec.edge_probability) {
          edges.push_back({u, v, draw_weight()});
        }
      }
    }
    WeightedGraph g(spec.n, edges, spec.loop_mode);

    std::vector<double> slack(spec.n);
    bool ok = true;
    for (Vertex x = 0; x < spec.n && ok; ++x) {
      slack[x] = g.degree(x) - 2.0 * g.max_weight(x) + g.loop_contribution(x);
      ok = slack[x] >= 0.0;
    }
    if (!ok) continue;

    Demands demands = Demands::zero(spec.n);
    for (Vertex x = 0; x < spec.n; ++x) {
      const double u = spec.fixed_u.value_or(unit(rng));
      const double v = spec.fixed_v.value_or(unit(rng));
      double& a = demands.a[x];
      double& b = demands.b[x];
      a = u * slack[x];
      b = v * (slack[x] - a);
      // Rounding in a + b can overshoot the slack by an ulp; trim it back so
      // check_feasibility agrees with the construction.
      auto over = [&] {
        return g.degree(x) - a - b - 2.0 * g.max_weight(x) +
                   g.loop_contribution(x) < 0.0;
      };
      while (over() && b > 0.0) b = std::nextafter(b, 0.0);
      while (over() && a > 0.0) a = std::nextafter(a, 0.0);
    }
    return {std::move(g), std::move(demands)};
  }
  throw Error(ErrorKind::kGenerationFailed,
              "no graph with d >= 2W at every vertex after " +
                  std::to_string(spec.max_retries) + " attempts");
}

}  // namespace wgd
