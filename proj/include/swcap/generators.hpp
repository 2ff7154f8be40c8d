#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "swcap/graph.hpp"
#include "swcap/normalizers.hpp"
#include "swcap/params.hpp"
#include "swcap/rng.hpp"

namespace swcap {

/// One shortcut trial: node `from` picked endpoint `to` in trial `trial`.
struct ShortcutTrial {
  NodeId from;
  NodeId to;
  int trial;
};

struct RewireStats {
  std::size_t rewired = 0;
  /// Edges left in place because no admissible target existed.
  std::size_t stuck = 0;
  /// Rewires that landed on an existing edge (kNotInLattice only).
  std::size_t collapsed = 0;
};

namespace detail {

inline void add_ring_lattice(GraphBuilder& b, const RingLatticeParams& p) {
  for (int x = 1; x <= p.half(); ++x) {
    for (int u = 0; u < p.n; ++u) b.add_edge(static_cast<NodeId>(u), static_cast<NodeId>((u + x) % p.n));
  }
}

}  // namespace detail

/// Node i adjacent to j iff 1 <= ring_distance(i, j) <= k/2.
inline WeightedGraph gen_ring_lattice(const RingLatticeParams& p) {
  p.validate();
  GraphBuilder b(static_cast<std::size_t>(p.n));
  detail::add_ring_lattice(b, p);
  return std::move(b).build();
}

/// Ring lattice plus each non-lattice pair independently with probability p.
/// Pair (u, v), u < v, is decided by stream (seed, shortcut, u).
inline WeightedGraph gen_shortcut_smallworld(const ShortcutParams& p, Seed seed) {
  p.validate();
  const int n = p.base.n;
  GraphBuilder b(static_cast<std::size_t>(n));
  detail::add_ring_lattice(b, p.base);
  for (int u = 0; u < n; ++u) {
    Stream rng(derive_seed(seed.value, {tag(StreamTag::kShortcut), static_cast<std::uint64_t>(u)}));
    for (int v = u + 1; v < n; ++v) {
      if (ring_distance(u, v, n) <= p.base.half()) continue;
      if (rng.uniform01() < p.p) b.add_edge(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
  }
  return std::move(b).build();
}

/// Lap-order rewiring: for x = 1..k/2 and u = 0..n-1 in order, the original
/// lattice edge (u, u+x) is rewired with probability p, keeping endpoint u and
/// re-targeting the far end uniformly over the admissible set. Each original
/// edge is considered exactly once; rewired edges are never revisited.
inline WeightedGraph gen_rewired_smallworld(const RewiringParams& p, Seed seed,
                                            RewireStats* stats = nullptr) {
  p.validate();
  const std::size_t n = static_cast<std::size_t>(p.base.n);
  std::vector<std::uint8_t> adj(n * n, 0);
  std::vector<std::size_t> degree(n, 0);
  auto link = [&](std::size_t a, std::size_t b) {
    adj[a * n + b] = adj[b * n + a] = 1;
    ++degree[a];
    ++degree[b];
  };
  auto unlink = [&](std::size_t a, std::size_t b) {
    adj[a * n + b] = adj[b * n + a] = 0;
    --degree[a];
    --degree[b];
  };
  for (int x = 1; x <= p.base.half(); ++x) {
    for (std::size_t u = 0; u < n; ++u) link(u, (u + x) % n);
  }

  RewireStats local;
  for (int x = 1; x <= p.base.half(); ++x) {
    for (std::size_t u = 0; u < n; ++u) {
      const std::size_t v = (u + x) % n;
      Stream rng(derive_seed(seed.value, {tag(StreamTag::kRewire), static_cast<std::uint64_t>(x),
                                          static_cast<std::uint64_t>(u)}));
      if (!(rng.uniform01() < p.p)) continue;

      const auto admissible = [&](std::size_t w) {
        if (w == u) return false;
        if (p.targets == RewireTargets::kNotAdjacent) return adj[u * n + w] == 0;
        return ring_distance(static_cast<long long>(u), static_cast<long long>(w),
                             static_cast<long long>(n)) > p.base.half();
      };
      std::size_t candidates = 0;
      for (std::size_t w = 0; w < n; ++w) candidates += admissible(w);
      if (candidates == 0) {
        ++local.stuck;
        continue;
      }
      std::uint64_t pick = rng.below(candidates);
      std::size_t target = 0;
      for (std::size_t w = 0; w < n; ++w) {
        if (admissible(w) && pick-- == 0) {
          target = w;
          break;
        }
      }
      unlink(u, v);
      if (adj[u * n + target]) {
        ++local.collapsed;
      } else {
        link(u, target);
      }
      ++local.rewired;
    }
  }

  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (adj[a * n + b]) edges.push_back({static_cast<NodeId>(a), static_cast<NodeId>(b), 1.0});
    }
  }
  if (stats) *stats = local;
  return WeightedGraph(n, std::move(edges));
}

/// Per-node harmonic endpoint law on the Kleinberg grid. Built once per
/// parameter set and shared by every sampled instance.
///
/// A trial from u first picks a distance class t > h with probability
/// count_u(t) t^{-r} / s(u), then a node uniformly within that class, so
/// each candidate v is hit with probability d(u,v)^{-r} / s(u).
class KleinbergSampler {
 public:
  explicit KleinbergSampler(const KleinbergParams& p) : p_(p) {
    p.validate();
    const int n = p.n;
    const int max_d = 2 * (n - 1);
    classes_ = max_d - p.h;
    cumulative_.resize(static_cast<std::size_t>(n) * n * classes_);
    counts_.resize(cumulative_.size());
    std::vector<long long> count(max_d + 1);
    for (int x = 1; x <= n; ++x) {
      for (int y = 1; y <= n; ++y) {
        std::fill(count.begin(), count.end(), 0);
        for (int i = 1; i <= n; ++i) {
          for (int j = 1; j <= n; ++j) ++count[std::abs(i - x) + std::abs(j - y)];
        }
        const std::size_t base = static_cast<std::size_t>(grid_node({x, y}, n)) * classes_;
        double acc = 0.0;
        for (int c = 0; c < classes_; ++c) {
          const int t = p.h + 1 + c;
          acc += static_cast<double>(count[t]) * decay(t, p.r);
          cumulative_[base + c] = acc;
          counts_[base + c] = static_cast<int>(count[t]);
        }
      }
    }
  }

  const KleinbergParams& params() const { return p_; }

  /// Sum of d^{-r} over candidates of node u (0 when u has none).
  double normalizer(NodeId u) const { return cumulative_[static_cast<std::size_t>(u) * classes_ + classes_ - 1]; }

  std::optional<NodeId> draw(NodeId u, Stream& rng) const {
    const std::size_t base = static_cast<std::size_t>(u) * classes_;
    const double total = cumulative_[base + classes_ - 1];
    if (!(total > 0.0)) return std::nullopt;
    const double target = rng.uniform01() * total;
    const auto first = cumulative_.begin() + static_cast<std::ptrdiff_t>(base);
    // Empty classes repeat their predecessor's cumulative value, so
    // upper_bound never lands on one.
    auto it = std::upper_bound(first, first + classes_, target);
    if (it == first + classes_) {
      do {
        --it;
      } while (counts_[static_cast<std::size_t>(it - cumulative_.begin())] == 0);
    }
    const int c = static_cast<int>(it - first);
    const int t = p_.h + 1 + c;
    const auto which = static_cast<int>(rng.below(static_cast<std::uint64_t>(counts_[base + c])));
    return grid_node(nth_at_distance(grid_point(u, p_.n), t, which), p_.n);
  }

 private:
  // Enumerates grid points at distance t from `from` in (dx ascending,
  // dy = -rem before +rem) order and returns the index-th one.
  GridPoint nth_at_distance(GridPoint from, int t, int index) const {
    const int n = p_.n;
    for (int dx = std::max(-t, 1 - from.x); dx <= std::min(t, n - from.x); ++dx) {
      const int rem = t - std::abs(dx);
      const int xs = from.x + dx;
      if (from.y - rem >= 1) {
        if (index-- == 0) return {xs, from.y - rem};
      }
      if (rem != 0 && from.y + rem <= n) {
        if (index-- == 0) return {xs, from.y + rem};
      }
    }
    throw std::logic_error("KleinbergSampler: distance class count mismatch");
  }

  KleinbergParams p_;
  int classes_ = 0;
  std::vector<double> cumulative_;
  std::vector<int> counts_;
};

/// Kleinberg grid: every pair within lattice distance h, plus q harmonic
/// trials per node (stream (seed, kleinberg, node, trial)). Repeated picks
/// collapse into one undirected edge.
inline WeightedGraph gen_kleinberg(const KleinbergSampler& sampler, Seed seed,
                                   std::vector<ShortcutTrial>* trials = nullptr) {
  const auto& p = sampler.params();
  const int n = p.n;
  GraphBuilder b(static_cast<std::size_t>(n) * n);
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      const GridPoint u{x, y};
      for (int dx = -p.h; dx <= p.h; ++dx) {
        const int rem = p.h - std::abs(dx);
        for (int dy = -rem; dy <= rem; ++dy) {
          const GridPoint v{x + dx, y + dy};
          if ((dx == 0 && dy == 0) || v.x < 1 || v.x > n || v.y < 1 || v.y > n) continue;
          if (grid_node(u, n) < grid_node(v, n)) b.add_edge(grid_node(u, n), grid_node(v, n));
        }
      }
    }
  }
  for (NodeId u = 0; u < static_cast<NodeId>(n * n); ++u) {
    for (int t = 0; t < p.q; ++t) {
      Stream rng(derive_seed(seed.value, {tag(StreamTag::kKleinberg), u, static_cast<std::uint64_t>(t)}));
      if (auto v = sampler.draw(u, rng)) {
        b.add_edge(u, *v);
        if (trials) trials->push_back({u, *v, t});
      }
    }
  }
  return std::move(b).build();
}

inline WeightedGraph gen_kleinberg(const KleinbergParams& p, Seed seed,
                                   std::vector<ShortcutTrial>* trials = nullptr) {
  return gen_kleinberg(KleinbergSampler(p), seed, trials);
}

/// Harmonic endpoint law of the navigable ring; identical for every node.
class RingSampler {
 public:
  explicit RingSampler(const NavigableRingParams& p) : p_(p) {
    p.validate();
    const int n = p.base.n;
    double acc = 0.0;
    for (int t = p.base.half() + 1; t <= n / 2; ++t) {
      const int count = (n % 2 == 0 && t == n / 2) ? 1 : 2;
      acc += count * decay(t, p.r);
      distances_.push_back(t);
      cumulative_.push_back(acc);
    }
  }

  const NavigableRingParams& params() const { return p_; }
  double normalizer() const { return cumulative_.back(); }

  NodeId draw(NodeId u, Stream& rng) const {
    const int n = p_.base.n;
    const double target = rng.uniform01() * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
    if (it == cumulative_.end()) --it;
    const int t = distances_[static_cast<std::size_t>(it - cumulative_.begin())];
    if (n % 2 == 0 && t == n / 2) return static_cast<NodeId>((u + t) % n);
    const bool clockwise = rng.below(2) == 0;
    return static_cast<NodeId>(clockwise ? (u + t) % n : (u + n - t) % n);
  }

 private:
  NavigableRingParams p_;
  std::vector<int> distances_;
  std::vector<double> cumulative_;
};

/// Ring lattice plus q harmonic trials per node over N_i = {j : d(i,j) > k/2}
/// (stream (seed, navigable, node, trial)); duplicates collapse.
inline WeightedGraph gen_navigable_ring(const RingSampler& sampler, Seed seed,
                                        std::vector<ShortcutTrial>* trials = nullptr) {
  const auto& p = sampler.params();
  GraphBuilder b(static_cast<std::size_t>(p.base.n));
  detail::add_ring_lattice(b, p.base);
  for (NodeId u = 0; u < static_cast<NodeId>(p.base.n); ++u) {
    for (int t = 0; t < p.q; ++t) {
      Stream rng(derive_seed(seed.value, {tag(StreamTag::kNavigableRing), u, static_cast<std::uint64_t>(t)}));
      const NodeId v = sampler.draw(u, rng);
      b.add_edge(u, v);
      if (trials) trials->push_back({u, v, t});
    }
  }
  return std::move(b).build();
}

inline WeightedGraph gen_navigable_ring(const NavigableRingParams& p, Seed seed,
                                        std::vector<ShortcutTrial>* trials = nullptr) {
  return gen_navigable_ring(RingSampler(p), seed, trials);
}

}  // namespace swcap
