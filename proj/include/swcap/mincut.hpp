#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "swcap/graph.hpp"

namespace swcap {

struct CutResult {
  double value = 0.0;
  /// One side of the cut, sorted ascending.
  std::vector<NodeId> partition;
};

/// Exact global minimum cut (Stoer-Wagner, O(N^3) on a dense matrix).
///
/// Disconnected graphs yield value 0 with one component as the witness.
/// The reported value is recomputed with cut_value() on the returned
/// partition, so the two always agree bit for bit.
inline CutResult global_min_cut(const WeightedGraph& g) {
  const std::size_t n = g.node_count();
  if (n < 2) throw ParamError("global_min_cut: need at least 2 nodes");

  std::vector<double> w(n * n, 0.0);
  for (const auto& e : g.edges()) {
    w[e.u * n + e.v] += e.weight;
    w[e.v * n + e.u] += e.weight;
  }

  std::vector<std::vector<NodeId>> members(n);
  for (std::size_t i = 0; i < n; ++i) members[i] = {static_cast<NodeId>(i)};

  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;

  std::vector<double> key(n);
  std::vector<char> added(n);
  double best = std::numeric_limits<double>::infinity();
  std::vector<NodeId> best_side;

  while (active.size() > 1) {
    for (std::size_t v : active) {
      key[v] = 0.0;
      added[v] = 0;
    }
    std::size_t prev = active.front();
    std::size_t last = active.front();
    for (std::size_t step = 0; step < active.size(); ++step) {
      std::size_t pick = n;
      double pick_key = -1.0;
      for (std::size_t v : active) {
        if (!added[v] && key[v] > pick_key) {
          pick = v;
          pick_key = key[v];
        }
      }
      added[pick] = 1;
      prev = last;
      last = pick;
      const double* row = &w[pick * n];
      for (std::size_t v : active) {
        if (!added[v]) key[v] += row[v];
      }
    }

    if (key[last] < best) {
      best = key[last];
      best_side = members[last];
    }

    // Contract `last` into `prev`.
    for (std::size_t v : active) {
      w[prev * n + v] += w[last * n + v];
      w[v * n + prev] = w[prev * n + v];
    }
    w[prev * n + prev] = 0.0;
    members[prev].insert(members[prev].end(), members[last].begin(), members[last].end());
    std::erase(active, last);
  }

  std::sort(best_side.begin(), best_side.end());
  CutResult result;
  result.value = cut_value(g, best_side);
  result.partition = std::move(best_side);
  return result;
}

inline constexpr std::size_t kBruteForceMaxNodes = 20;

/// Exhaustive minimum over all 2^(N-1)-1 nontrivial partitions. Oracle for
/// tests; refuses graphs above kBruteForceMaxNodes nodes.
inline CutResult brute_force_min_cut(const WeightedGraph& g) {
  const std::size_t n = g.node_count();
  if (n < 2) throw ParamError("brute_force_min_cut: need at least 2 nodes");
  if (n > kBruteForceMaxNodes)
    throw ParamError("brute_force_min_cut: refusing graphs with more than 20 nodes");

  // Node n-1 is pinned to the complement, so each partition is seen once.
  const std::uint32_t limit = std::uint32_t{1} << (n - 1);
  const auto edges = g.edges();
  double best = std::numeric_limits<double>::infinity();
  std::uint32_t best_mask = 1;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    double cut = 0.0;
    for (const auto& e : edges) {
      const bool a = (mask >> e.u) & 1u;
      const bool b = (mask >> e.v) & 1u;
      if (a != b) cut += e.weight;
    }
    if (cut < best) {
      best = cut;
      best_mask = mask;
    }
  }

  CutResult result;
  for (std::size_t v = 0; v + 1 < n; ++v) {
    if ((best_mask >> v) & 1u) result.partition.push_back(static_cast<NodeId>(v));
  }
  result.value = best;
  return result;
}

}  // namespace swcap
