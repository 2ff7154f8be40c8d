#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <optional>
#include <ostream>
#include <variant>
#include <vector>

#include "swcap/format.hpp"
#include "swcap/generators.hpp"
#include "swcap/graph.hpp"
#include "swcap/parallel.hpp"
#include "swcap/rng.hpp"

namespace swcap {

struct RingMetric {
  int n;
  int operator()(NodeId a, NodeId b) const { return ring_distance(a, b, n); }
  int diameter() const { return n / 2; }
};

struct LatticeMetric {
  int side;
  int operator()(NodeId a, NodeId b) const {
    return lattice_distance(grid_point(a, side), grid_point(b, side));
  }
  int diameter() const { return 2 * (side - 1); }
};

enum class MetricKind { kRing, kLattice };

struct RoutingTrace {
  NodeId source = 0;
  NodeId target = 0;
  int hops = 0;
  bool delivered = false;
  std::vector<NodeId> path;
};

/// Greedy forwarding: the holder passes the message to its neighbour closest
/// to the target (ties to the lowest id). Stops on arrival, when no neighbour
/// is strictly closer, or after max_steps hops.
template <typename Metric>
RoutingTrace greedy_route(const WeightedGraph& g, const Metric& metric, NodeId source, NodeId target,
                          int max_steps) {
  if (source == target) throw ParamError("greedy_route: source and target must differ");
  if (source >= g.node_count() || target >= g.node_count())
    throw ParamError("greedy_route: node out of range");
  RoutingTrace trace;
  trace.source = source;
  trace.target = target;
  trace.path.push_back(source);
  NodeId current = source;
  int current_distance = metric(current, target);
  while (current != target && trace.hops < max_steps) {
    NodeId best = current;
    int best_distance = current_distance;
    for (const auto& nb : g.neighbors(current)) {
      const int d = metric(nb.node, target);
      if (d < best_distance) {
        best = nb.node;
        best_distance = d;
      }
    }
    if (best == current) break;
    current = best;
    current_distance = best_distance;
    trace.path.push_back(current);
    ++trace.hops;
  }
  trace.delivered = current == target;
  return trace;
}

inline RoutingTrace greedy_route(const WeightedGraph& g, MetricKind kind, NodeId source, NodeId target,
                                 int max_steps) {
  if (kind == MetricKind::kRing)
    return greedy_route(g, RingMetric{static_cast<int>(g.node_count())}, source, target, max_steps);
  const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(g.node_count()))));
  if (static_cast<std::size_t>(side) * side != g.node_count())
    throw ParamError("greedy_route: lattice metric needs a square node count");
  return greedy_route(g, LatticeMetric{side}, source, target, max_steps);
}

/// ln^2(2n) / ln 2: expected greedy delivery-time ceiling on the navigable ring, r = 1.
inline double navigability_bound(long long n) {
  if (n < 2) throw ParamError("navigability_bound: n must be >= 2");
  const double l = std::log(2.0 * static_cast<double>(n));
  return l * l / std::log(2.0);
}

/// Phase of a holder at distance d from the target: 0 if d <= 2, else the j
/// with 2^j < d <= 2^{j+1}.
inline int routing_phase(int distance) {
  if (distance <= 2) return 0;
  return static_cast<int>(std::bit_width(static_cast<unsigned>(distance - 1))) - 1;
}

/// Steps spent in each phase along a trace.
template <typename Metric>
std::vector<int> phase_steps(const RoutingTrace& trace, const Metric& metric) {
  std::vector<int> steps;
  for (std::size_t i = 0; i + 1 < trace.path.size(); ++i) {
    const int phase = routing_phase(metric(trace.path[i], trace.target));
    if (static_cast<std::size_t>(phase) >= steps.size()) steps.resize(phase + 1, 0);
    ++steps[phase];
  }
  return steps;
}

/// True when every hop strictly reduces the metric distance to the target.
template <typename Metric>
bool strictly_monotone(const RoutingTrace& trace, const Metric& metric) {
  for (std::size_t i = 0; i + 1 < trace.path.size(); ++i) {
    if (metric(trace.path[i + 1], trace.target) >= metric(trace.path[i], trace.target)) return false;
  }
  return true;
}

using RoutingModel = std::variant<NavigableRingParams, KleinbergParams>;

struct DeliveryStats {
  std::size_t trials = 0;
  double mean_hops = 0.0;
  int max_hops = 0;
  /// Ceiling ln^2(2n)/ln 2; only defined for the navigable ring with r = 1.
  std::optional<double> bound;
  bool bound_satisfied = true;
  std::size_t undelivered = 0;
  std::size_t non_monotone = 0;
  /// Mean steps per trial spent in each phase.
  std::vector<double> mean_phase_steps;

  static constexpr const char* csv_header = "model,n,k,p,h,q,r,trials,mean_hops,max_hops,bound,bound_satisfied";
};

struct DeliveryOptions {
  /// Optional JSON-lines sink receiving one object per trial.
  std::ostream* trace_out = nullptr;
};

/// One fresh graph per trial (seed derived from (master, trial)), a uniform
/// ordered pair of distinct nodes, one greedy route. Aggregates are computed
/// in trial order, so the result does not depend on thread scheduling.
inline DeliveryStats delivery_experiment(const RoutingModel& model, std::size_t trials, Seed seed,
                                         const DeliveryOptions& options = {}) {
  if (trials < 1) throw ParamError("delivery_experiment: trials must be >= 1");

  struct TrialOutcome {
    RoutingTrace trace;
    std::vector<int> phases;
    bool monotone = true;
  };
  std::vector<TrialOutcome> outcomes(trials);

  auto run = [&](const auto& sampler, const auto& metric, auto generate) {
    parallel_for(trials, [&](std::size_t t) {
      const std::uint64_t trial_seed = derive_seed(seed.value, {tag(StreamTag::kRoutingGraph), t});
      const WeightedGraph g = generate(sampler, Seed{trial_seed});
      Stream pick(derive_seed(trial_seed, {tag(StreamTag::kRoutingPair)}));
      const std::uint64_t n = g.node_count();
      const auto src = static_cast<NodeId>(pick.below(n));
      auto dst = static_cast<NodeId>(pick.below(n - 1));
      if (dst >= src) ++dst;
      auto& out = outcomes[t];
      out.trace = greedy_route(g, metric, src, dst, static_cast<int>(n));
      out.phases = phase_steps(out.trace, metric);
      out.monotone = strictly_monotone(out.trace, metric);
    });
  };

  DeliveryStats stats;
  stats.trials = trials;
  int ring_n = 0;
  if (const auto* ring = std::get_if<NavigableRingParams>(&model)) {
    const RingSampler sampler(*ring);
    run(sampler, RingMetric{ring->base.n},
        [](const RingSampler& s, Seed sd) { return gen_navigable_ring(s, sd); });
    if (ring->r == 1.0) ring_n = ring->base.n;
  } else {
    const auto& grid = std::get<KleinbergParams>(model);
    const KleinbergSampler sampler(grid);
    run(sampler, LatticeMetric{grid.n},
        [](const KleinbergSampler& s, Seed sd) { return gen_kleinberg(s, sd); });
  }

  double hop_sum = 0.0;
  std::vector<double> phase_sum;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto& o = outcomes[t];
    hop_sum += o.trace.hops;
    stats.max_hops = std::max(stats.max_hops, o.trace.hops);
    if (!o.trace.delivered) ++stats.undelivered;
    if (!o.monotone) ++stats.non_monotone;
    if (o.phases.size() > phase_sum.size()) phase_sum.resize(o.phases.size(), 0.0);
    for (std::size_t j = 0; j < o.phases.size(); ++j) phase_sum[j] += o.phases[j];
    if (options.trace_out) {
      *options.trace_out << "{\"trial\":" << t << ",\"source\":" << o.trace.source
                         << ",\"target\":" << o.trace.target << ",\"hops\":" << o.trace.hops
                         << ",\"delivered\":" << (o.trace.delivered ? "true" : "false") << ",\"path\":[";
      for (std::size_t i = 0; i < o.trace.path.size(); ++i)
        *options.trace_out << (i ? "," : "") << o.trace.path[i];
      *options.trace_out << "]}\n";
    }
  }
  stats.mean_hops = hop_sum / static_cast<double>(trials);
  stats.mean_phase_steps.resize(phase_sum.size());
  for (std::size_t j = 0; j < phase_sum.size(); ++j)
    stats.mean_phase_steps[j] = phase_sum[j] / static_cast<double>(trials);
  if (ring_n > 0) {
    stats.bound = navigability_bound(ring_n);
    stats.bound_satisfied = stats.mean_hops <= *stats.bound;
  }
  return stats;
}

}  // namespace swcap
