#pragma once

#include <cmath>
#include <vector>

#include "swcap/graph.hpp"
#include "swcap/normalizers.hpp"
#include "swcap/params.hpp"

namespace swcap {

/// How per-node shortcut trials turn into an edge weight.
enum class EdgeWeightRule {
  /// Sum over both endpoints of the exactly-one-success binomial term
  /// q (1-a)^{q-1} a. This is the weight used for every c_w formula.
  kExactlyOne,
  /// True presence probability 1 - (1-a_u)^q (1-a_v)^q of independent trials.
  kAtLeastOne,
};

/// Probability that exactly one of q trials with success probability a succeeds.
inline double exactly_one_success(int q, double a) {
  if (q == 0 || a == 0.0) return 0.0;
  return q * std::pow(1.0 - a, q - 1) * a;
}

inline double pair_weight(EdgeWeightRule rule, int q, double a_u, double a_v) {
  if (rule == EdgeWeightRule::kExactlyOne) return exactly_one_success(q, a_u) + exactly_one_success(q, a_v);
  return 1.0 - std::pow(1.0 - a_u, q) * std::pow(1.0 - a_v, q);
}

namespace detail {

inline WeightedGraph two_class_ring_graph(const RingLatticeParams& p, double lattice_w, double other_w) {
  const int n = p.n;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double w = ring_distance(u, v, n) <= p.half() ? lattice_w : other_w;
      if (w > 0.0) edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), w});
    }
  }
  return WeightedGraph(static_cast<std::size_t>(n), std::move(edges));
}

}  // namespace detail

/// Complete graph with lattice weight w1 and non-lattice weight w2.
inline WeightedGraph lattice_clique_graph(const RingLatticeParams& p, double w1, double w2) {
  p.validate();
  if (!(w1 >= 0.0) || !(w2 >= 0.0)) throw ParamError("weights must be >= 0");
  return detail::two_class_ring_graph(p, w1, w2);
}

/// Lattice edges weight 1, every other pair weight p. Zero weights are omitted.
inline WeightedGraph expected_graph_shortcuts(const ShortcutParams& p) {
  p.validate();
  return detail::two_class_ring_graph(p.base, 1.0, p.p);
}

/// Lower-bound graph F of the rewiring model: lattice edges 1-p, other pairs
/// pk/(n-k-1). Not the exact edge-probability graph.
inline WeightedGraph expected_graph_rewired_lower(const RewiringParams& p) {
  p.validate();
  const int n = p.base.n;
  const int k = p.base.k;
  return detail::two_class_ring_graph(p.base, 1.0 - p.p, p.p * k / (n - k - 1));
}

/// Kleinberg expected graph: pairs within h weight 1; farther pairs get the
/// two-sided weight with a_u(v) = d(u,v)^{-r} / s(u). A node whose s(u) is 0
/// contributes nothing.
inline WeightedGraph expected_graph_kleinberg(const KleinbergParams& p,
                                              EdgeWeightRule rule = EdgeWeightRule::kExactlyOne) {
  p.validate();
  const int n = p.n;
  const NormalizerTable s = kleinberg_normalizer_table(p);
  const std::size_t count = static_cast<std::size_t>(n) * n;
  std::vector<Edge> edges;
  for (NodeId u = 0; u < count; ++u) {
    const GridPoint pu = grid_point(u, n);
    for (NodeId v = u + 1; v < count; ++v) {
      const GridPoint pv = grid_point(v, n);
      const int d = lattice_distance(pu, pv);
      double w = 1.0;
      if (d > p.h) {
        const double su = s.values[u];
        const double sv = s.values[v];
        const double a_u = su > 0.0 ? decay(d, p.r) / su : 0.0;
        const double a_v = sv > 0.0 ? decay(d, p.r) / sv : 0.0;
        w = pair_weight(rule, p.q, a_u, a_v);
      }
      if (w > 0.0) edges.push_back({u, v, w});
    }
  }
  return WeightedGraph(count, std::move(edges));
}

/// Navigable ring expected graph: lattice edges 1, a pair at distance
/// t > k/2 gets 2q (t^{-r}/s)(1 - t^{-r}/s)^{q-1} under kExactlyOne.
inline WeightedGraph expected_graph_navigable_ring(const NavigableRingParams& p,
                                                   EdgeWeightRule rule = EdgeWeightRule::kExactlyOne) {
  const double s = ring_normalizer(p);
  const int n = p.base.n;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int t = ring_distance(u, v, n);
      double w = 1.0;
      if (t > p.base.half()) {
        const double a = decay(t, p.r) / s;
        w = pair_weight(rule, p.q, a, a);
      }
      if (w > 0.0) edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), w});
    }
  }
  return WeightedGraph(static_cast<std::size_t>(n), std::move(edges));
}

}  // namespace swcap
