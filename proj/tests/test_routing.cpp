#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "swcap/generators.hpp"
#include "swcap/routing.hpp"

using namespace swcap;

TEST(GreedyRoute, CycleWalk) {
  const auto g = gen_ring_lattice({10, 2});
  const auto trace = greedy_route(g, MetricKind::kRing, 0, 5, 100);
  EXPECT_TRUE(trace.delivered);
  EXPECT_EQ(trace.hops, 5);
  EXPECT_EQ(trace.path.size(), 6u);
  EXPECT_EQ(trace.path.front(), 0u);
  EXPECT_EQ(trace.path.back(), 5u);
}

TEST(GreedyRoute, TieGoesToLowestId) {
  // From 0 to the antipode 5 both 1 and 9 are one step closer.
  const auto trace = greedy_route(gen_ring_lattice({10, 2}), RingMetric{10}, 0, 5, 100);
  EXPECT_EQ(trace.path[1], 1u);
}

TEST(GreedyRoute, LatticeStepsOfTwo) {
  const auto g = gen_ring_lattice({10, 4});
  for (NodeId s = 0; s < 10; ++s)
    for (NodeId t = 0; t < 10; ++t) {
      if (s == t) continue;
      const auto trace = greedy_route(g, MetricKind::kRing, s, t, 100);
      EXPECT_TRUE(trace.delivered);
      EXPECT_EQ(trace.hops, (ring_distance(s, t, 10) + 1) / 2);
    }
}

TEST(GreedyRoute, GridManhattanWalk) {
  const auto g = gen_kleinberg({6, 1, 0, 2.0}, Seed{0});
  const auto trace = greedy_route(g, MetricKind::kLattice, grid_node({1, 1}, 6), grid_node({6, 4}, 6), 100);
  EXPECT_TRUE(trace.delivered);
  EXPECT_EQ(trace.hops, 8);
  EXPECT_TRUE(strictly_monotone(trace, LatticeMetric{6}));
}

TEST(GreedyRoute, StopsWithoutProgressOrBudget) {
  const WeightedGraph g(4, {{0, 1, 1.0}, {2, 3, 1.0}});
  const auto stuck = greedy_route(g, RingMetric{4}, 0, 2, 10);
  EXPECT_FALSE(stuck.delivered);
  EXPECT_EQ(stuck.hops, 1);
  const auto short_budget = greedy_route(gen_ring_lattice({20, 2}), RingMetric{20}, 0, 10, 3);
  EXPECT_FALSE(short_budget.delivered);
  EXPECT_EQ(short_budget.hops, 3);
}

TEST(GreedyRoute, RejectsBadArguments) {
  const auto g = gen_ring_lattice({10, 2});
  EXPECT_THROW(greedy_route(g, MetricKind::kRing, 3, 3, 10), ParamError);
  EXPECT_THROW(greedy_route(g, MetricKind::kRing, 3, 10, 10), ParamError);
  EXPECT_THROW(greedy_route(g, MetricKind::kLattice, 0, 1, 10), ParamError);
}

TEST(NavigabilityBound, Values) {
  EXPECT_NEAR(navigability_bound(1600), 93.97, 0.01);
  EXPECT_NEAR(navigability_bound(256), std::pow(std::log(512.0), 2) / std::log(2.0), 1e-12);
  double prev = 0.0;
  for (long long n = 2; n < 100000; n = n * 3 / 2 + 1) {
    EXPECT_GT(navigability_bound(n), prev);
    prev = navigability_bound(n);
  }
  EXPECT_THROW(navigability_bound(1), ParamError);
}

TEST(RoutingPhase, Boundaries) {
  EXPECT_EQ(routing_phase(1), 0);
  EXPECT_EQ(routing_phase(2), 0);
  EXPECT_EQ(routing_phase(3), 1);
  EXPECT_EQ(routing_phase(4), 1);
  EXPECT_EQ(routing_phase(5), 2);
  EXPECT_EQ(routing_phase(8), 2);
  EXPECT_EQ(routing_phase(9), 3);
  for (int d = 3; d < 5000; ++d) {
    const int j = routing_phase(d);
    EXPECT_LT(1 << j, d);
    EXPECT_LE(d, 1 << (j + 1));
  }
}

TEST(DeliveryExperiment, NavigableRingRespectsBound) {
  const auto stats = delivery_experiment(NavigableRingParams{{256, 2}, 1, 1.0}, 2000, Seed{17});
  EXPECT_EQ(stats.undelivered, 0u);
  EXPECT_EQ(stats.non_monotone, 0u);
  ASSERT_TRUE(stats.bound.has_value());
  EXPECT_TRUE(stats.bound_satisfied);
  EXPECT_LE(stats.mean_hops, stats.max_hops);
  EXPECT_LE(stats.max_hops, 128);
  for (double steps : stats.mean_phase_steps) EXPECT_LE(steps, std::log(512.0));
}

TEST(DeliveryExperiment, Deterministic) {
  const RoutingModel model = NavigableRingParams{{128, 4}, 2, 1.0};
  std::ostringstream a, b;
  const auto s1 = delivery_experiment(model, 300, Seed{5}, {&a});
  const auto s2 = delivery_experiment(model, 300, Seed{5}, {&b});
  EXPECT_EQ(s1.mean_hops, s2.mean_hops);
  EXPECT_EQ(s1.max_hops, s2.max_hops);
  const std::string trace = a.str();
  EXPECT_EQ(trace, b.str());
  EXPECT_EQ(std::count(trace.begin(), trace.end(), '\n'), 300);
  EXPECT_EQ(trace.rfind("{\"trial\":0,", 0), 0u);
}

TEST(DeliveryExperiment, KleinbergHasNoBound) {
  const auto stats = delivery_experiment(KleinbergParams{12, 1, 1, 2.0}, 200, Seed{1});
  EXPECT_FALSE(stats.bound.has_value());
  EXPECT_TRUE(stats.bound_satisfied);
  EXPECT_EQ(stats.undelivered, 0u);
  EXPECT_EQ(stats.non_monotone, 0u);
  EXPECT_LE(stats.max_hops, 22);
}

TEST(DeliveryExperiment, UniformShortcutsRouteSlowerOnGrid) {
  const auto uniform = delivery_experiment(KleinbergParams{50, 1, 1, 0.0}, 1000, Seed{3});
  const auto harmonic = delivery_experiment(KleinbergParams{50, 1, 1, 2.0}, 1000, Seed{3});
  EXPECT_GT(uniform.mean_hops, harmonic.mean_hops);
}

TEST(DeliveryExperiment, UniformShortcutsRouteSlowerOnLargerGrid) {
  const auto uniform = delivery_experiment(KleinbergParams{100, 1, 1, 0.0}, 1000, Seed{3});
  const auto harmonic = delivery_experiment(KleinbergParams{100, 1, 1, 2.0}, 1000, Seed{3});
  EXPECT_GT(uniform.mean_hops, harmonic.mean_hops);
}

TEST(DeliveryExperiment, RejectsZeroTrials) {
  EXPECT_THROW(delivery_experiment(NavigableRingParams{{64, 2}, 1, 1.0}, 0, Seed{0}), ParamError);
}
