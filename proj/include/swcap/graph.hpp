#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace swcap {

/// Raised for any precondition violation on user-supplied parameters.
class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using NodeId = std::uint32_t;

struct Edge {
  NodeId u;
  NodeId v;
  double weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  NodeId node;
  double weight;
};

/// Hop distance on an n-node cycle.
inline int ring_distance(long long i, long long j, long long n) {
  if (n < 2) throw ParamError("ring_distance: n must be >= 2");
  if (i < 0 || j < 0 || i >= n || j >= n)
    throw ParamError("ring_distance: node index out of range");
  const long long diff = i > j ? i - j : j - i;
  return static_cast<int>(std::min(diff, n - diff));
}

/// 1-indexed point on the n x n grid.
struct GridPoint {
  int x;
  int y;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

inline int lattice_distance(GridPoint a, GridPoint b) {
  if (a.x < 1 || a.y < 1 || b.x < 1 || b.y < 1)
    throw ParamError("lattice_distance: grid coordinates start at 1");
  return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

/// Grid point (x, y) lives at flat id (x-1)*side + (y-1).
inline NodeId grid_node(GridPoint p, int side) {
  return static_cast<NodeId>((p.x - 1) * side + (p.y - 1));
}

inline GridPoint grid_point(NodeId id, int side) {
  return {static_cast<int>(id) / side + 1, static_cast<int>(id) % side + 1};
}

/// Immutable undirected graph with non-negative weights. Edges are stored
/// canonically (u < v, sorted) together with a CSR adjacency.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  WeightedGraph(std::size_t node_count, std::vector<Edge> edges)
      : n_(node_count), edges_(std::move(edges)) {
    if (n_ < 2) throw ParamError("graph needs at least 2 nodes");
    for (auto& e : edges_) {
      if (e.u >= n_ || e.v >= n_) throw ParamError("edge endpoint out of range");
      if (e.u == e.v) throw ParamError("self-loops are not allowed");
      if (!(e.weight >= 0.0) || !std::isfinite(e.weight))
        throw ParamError("edge weights must be finite and non-negative");
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
      return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
      if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
        throw ParamError("duplicate edge (" + std::to_string(edges_[i].u) + ", " +
                         std::to_string(edges_[i].v) + ")");
    }
    build_adjacency();
  }

  std::size_t node_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  /// Neighbours of u sorted by node id.
  std::span<const Neighbor> neighbors(NodeId u) const {
    return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
  }

  std::size_t degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }

  double weighted_degree(NodeId u) const {
    double sum = 0.0;
    for (const auto& nb : neighbors(u)) sum += nb.weight;
    return sum;
  }

  /// Weight of edge {u, v}, or 0 when absent.
  double weight(NodeId u, NodeId v) const {
    const auto nbs = neighbors(u);
    auto it = std::lower_bound(nbs.begin(), nbs.end(), v,
                               [](const Neighbor& nb, NodeId x) { return nb.node < x; });
    return (it != nbs.end() && it->node == v) ? it->weight : 0.0;
  }

  bool has_edge(NodeId u, NodeId v) const {
    const auto nbs = neighbors(u);
    return std::binary_search(nbs.begin(), nbs.end(), Neighbor{v, 0.0},
                              [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
  }

  double total_weight() const {
    double sum = 0.0;
    for (const auto& e : edges_) sum += e.weight;
    return sum;
  }

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build_adjacency() {
    offsets_.assign(n_ + 1, 0);
    for (const auto& e : edges_) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
    adjacency_.resize(offsets_[n_]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges_) {
      adjacency_[fill[e.u]++] = {e.v, e.weight};
      adjacency_[fill[e.v]++] = {e.u, e.weight};
    }
    for (std::size_t u = 0; u < n_; ++u) {
      std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[u]),
                adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[u + 1]),
                [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
    }
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
};

/// Accumulates edges; repeats of an unordered pair collapse into the first
/// occurrence when the graph is built.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t node_count) : n_(node_count) {
    if (n_ < 2) throw ParamError("graph needs at least 2 nodes");
  }

  void reserve(std::size_t edges) { edges_.reserve(edges); }

  void add_edge(NodeId u, NodeId v, double weight = 1.0) {
    if (u == v) throw ParamError("self-loops are not allowed");
    if (u > v) std::swap(u, v);
    edges_.push_back({u, v, weight});
  }

  WeightedGraph build() && {
    std::stable_sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
      return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    edges_.erase(std::unique(edges_.begin(), edges_.end(),
                             [](const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }),
                 edges_.end());
    return WeightedGraph(n_, std::move(edges_));
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

/// Total weight of edges with exactly one endpoint in `side`.
inline double cut_value(const WeightedGraph& g, std::span<const NodeId> side) {
  const std::size_t n = g.node_count();
  std::vector<char> in(n, 0);
  std::size_t members = 0;
  for (NodeId v : side) {
    if (v >= n) throw ParamError("cut_value: node out of range");
    if (!in[v]) {
      in[v] = 1;
      ++members;
    }
  }
  if (members == 0 || members == n)
    throw ParamError("cut_value: partition must be non-empty and proper");
  double sum = 0.0;
  for (const auto& e : g.edges()) {
    if (in[e.u] != in[e.v]) sum += e.weight;
  }
  return sum;
}

}  // namespace swcap
