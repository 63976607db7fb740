#include <doctest.h>

#include <random>

#include "support.hpp"
#include "wgd/oracle.hpp"
#include "wgd/solver.hpp"

using namespace wgd;
using namespace wgd::testing;

namespace {

std::uint64_t side_a_mask(const Partition& p) {
  return mask_of(p.set_a());
}

}  // namespace

TEST_CASE("brute_force_solve: K9 and the triangle") {
  const auto k9 = complete_graph(9);
  const auto none = brute_force_solve(k9, Demands::uniform(9, 3.5, 3.5));
  CHECK_FALSE(none.exists);
  CHECK(none.count == 0);
  CHECK_FALSE(none.witness.has_value());

  const auto some = brute_force_solve(k9, Demands::uniform(9, 3, 3));
  CHECK(some.exists);
  REQUIRE(some.witness.has_value());
  CHECK(verify_partition(k9, Demands::uniform(9, 3, 3), *some.witness).empty());
  // Splits of sizes 4/5 and 5/4: 2 · C(9,4).
  CHECK(some.count == 252);

  const auto t = brute_force_solve(triangle(), Demands::zero(3));
  CHECK(t.exists);
  CHECK(t.count == 6);
  CHECK(side_a_mask(*t.witness) == 1);
}

TEST_CASE("brute_force_solve: size limit") {
  const WeightedGraph big(kOracleMaxVertices + 1, std::span<const IndexedEdge>{});
  CHECK(error_kind([&] {
          brute_force_solve(big, Demands::zero(big.size()));
        }) == ErrorKind::kTooLarge);
}

TEST_CASE("brute_force_solve: threaded runs equal the serial run") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 12; ++trial) {
    RandomGraphSpec spec;
    spec.n = 10 + trial % 5;
    spec.p = 0.6;
    const auto g = random_graph(spec, rng);
    Demands d = Demands::zero(g.size());
    std::uniform_real_distribution<double> frac(0.0, 0.5);
    for (Vertex x = 0; x < g.size(); ++x) {
      d.a[x] = frac(rng) * g.degree(x);
      d.b[x] = frac(rng) * g.degree(x);
    }
    OracleOptions serial;
    serial.threads = 1;
    const auto s = brute_force_solve(g, d, serial);
    for (unsigned threads : {2u, 3u, 8u}) {
      OracleOptions par;
      par.threads = threads;
      const auto p = brute_force_solve(g, d, par);
      CHECK(p.exists == s.exists);
      CHECK(p.count == s.count);
      CHECK(p.witness.has_value() == s.witness.has_value());
      if (p.witness) CHECK(*p.witness == *s.witness);
    }
  }
}

TEST_CASE("brute_force_solve: count and witness match enumeration") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    RandomGraphSpec spec;
    spec.n = 2 + trial % 7;
    spec.p = 0.7;
    spec.loop_p = 0.2;
    const auto g = random_graph(spec, rng);
    Demands d = Demands::zero(g.size());
    std::uniform_real_distribution<double> frac(0.0, 0.6);
    for (Vertex x = 0; x < g.size(); ++x) {
      d.a[x] = frac(rng) * g.degree(x);
      d.b[x] = frac(rng) * g.degree(x);
    }
    std::uint64_t count = 0, first = 0;
    const std::uint64_t full = (std::uint64_t{1} << g.size()) - 1;
    for (std::uint64_t m = 1; m < full; ++m) {
      if (stable_by_definition(g, d, Partition::from_side_a(set_of_mask(g.size(), m)))) {
        if (count++ == 0) first = m;
      }
    }
    const auto r = brute_force_solve(g, d);
    CHECK(r.count == count);
    CHECK(r.exists == (count > 0));
    if (r.witness) {
      CHECK(side_a_mask(*r.witness) == first);
      CHECK(verify_partition(g, d, *r.witness).empty());
    }
  }
}

TEST_CASE("random_feasible_instance: construction") {
  InstanceSpec spec;
  spec.n = 9;
  spec.edge_probability = 1.0;
  spec.fixed_u = 1.0;
  spec.fixed_v = 1.0;
  const auto inst = random_feasible_instance(spec);
  REQUIRE(inst.graph.size() == 9);
  CHECK(inst.graph.edges().size() == 36);
  const auto report = check_feasibility(inst.graph, inst.demands);
  CHECK(report.feasible());
  for (Vertex x = 0; x < 9; ++x) {
    CHECK(inst.demands.a[x] + inst.demands.b[x] == 6.0);
    CHECK(report.slack[x] == 0.0);
  }
}

TEST_CASE("random_feasible_instance: determinism and feasibility") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    InstanceSpec spec;
    spec.n = 3 + seed % 10;
    spec.edge_probability = 0.8;
    spec.weight_min = 0.1;
    spec.weight_max = 3.0;
    spec.seed = seed;
    spec.loop_probability = seed % 3 == 0 ? 0.3 : 0.0;
    Instance a, b;
    try {
      a = random_feasible_instance(spec);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kGenerationFailed);
      continue;
    }
    b = random_feasible_instance(spec);
    CHECK(a.graph.edges() == b.graph.edges());
    CHECK(a.demands.a == b.demands.a);
    CHECK(a.demands.b == b.demands.b);
    CHECK(check_feasibility(a.graph, a.demands).feasible());
  }
}

TEST_CASE("random_feasible_instance: impossible requests fail") {
  InstanceSpec spec;
  spec.n = 2;
  spec.edge_probability = 1.0;
  spec.max_retries = 20;
  CHECK(error_kind([&] { random_feasible_instance(spec); }) ==
        ErrorKind::kGenerationFailed);
}

TEST_CASE("generated instances: solver output is an enumerated stable split") {
  for (std::uint64_t seed = 100; seed < 220; ++seed) {
    InstanceSpec spec;
    spec.n = 3 + seed % 10;
    spec.edge_probability = seed % 3 == 0 ? 1.0 : 0.8;
    spec.weight_min = 0.5;
    spec.weight_max = 1.5;
    spec.seed = seed;
    Instance inst;
    try {
      inst = random_feasible_instance(spec);
    } catch (const Error&) {
      continue;
    }
    const auto oracle = brute_force_solve(inst.graph, inst.demands);
    CHECK(oracle.exists);
    REQUIRE(oracle.witness.has_value());
    CHECK(verify_partition(inst.graph, inst.demands, *oracle.witness).empty());
    const auto r = solve(inst.graph, inst.demands);
    CHECK(is_stable_split(inst.graph, inst.demands, side_a_mask(r.partition)));
  }
}

TEST_CASE("lowering one demand never destroys existence") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    RandomGraphSpec spec;
    spec.n = 3 + trial % 6;
    spec.p = 0.8;
    const auto g = random_graph(spec, rng);
    Demands d = Demands::zero(g.size());
    std::uniform_real_distribution<double> frac(0.0, 0.7);
    for (Vertex x = 0; x < g.size(); ++x) {
      d.a[x] = frac(rng) * g.degree(x);
      d.b[x] = frac(rng) * g.degree(x);
    }
    if (!brute_force_solve(g, d).exists) continue;
    for (Vertex x = 0; x < g.size(); ++x) {
      for (int side = 0; side < 2; ++side) {
        Demands lower = d;
        (side == 0 ? lower.a[x] : lower.b[x]) *= 0.5;
        CHECK(brute_force_solve(g, lower).exists);
      }
    }
  }
}
