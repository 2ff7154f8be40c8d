#pragma once

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

#include "swcap/format.hpp"
#include "swcap/graph.hpp"
#include "swcap/params.hpp"

namespace swcap {

/// t^{-r} for a positive hop distance t.
inline double decay(int t, double r) { return r == 0.0 ? 1.0 : std::pow(static_cast<double>(t), -r); }

namespace detail {

/// Sum of counts[t] * t^{-r}, largest distance first so small terms
/// accumulate before large ones.
inline double weighted_count_sum(const std::vector<long long>& counts, double r) {
  double sum = 0.0;
  for (std::size_t t = counts.size(); t-- > 1;) {
    if (counts[t] != 0) sum += static_cast<double>(counts[t]) * decay(static_cast<int>(t), r);
  }
  return sum;
}

inline void check_in_grid(int x, int y, int n) {
  if (x < 1 || x > n || y < 1 || y > n) throw ParamError("grid point outside the n x n grid");
}

}  // namespace detail

/// Normalizing constant s(x, y) of the Kleinberg grid: the sum of d^{-r}
/// over every node farther than h from (x, y).
///
/// Computed as (sum over all other nodes) minus (sum over the diamond of
/// radius h), where the diamond is scanned line by line above and below
/// row y with column ranges clipped at the grid border. Returns 0 when every
/// node lies within h (degenerate: no shortcut candidates).
inline double kleinberg_normalizer(int x, int y, const KleinbergParams& p) {
  p.validate_shape();
  const int n = p.n;
  const int h = p.h;
  detail::check_in_grid(x, y, n);

  std::vector<long long> all(2 * n, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) ++all[std::abs(i - x) + std::abs(j - y)];
  }
  all[0] = 0;

  // Diamond scan. The second coordinate walks lines y+i (upper half,
  // including line y) and y-i (lower half); the first coordinate walks
  // right (x+j, j >= 0) and left (x-j, j >= 1).
  std::vector<long long> near(2 * n, 0);
  auto mark = [&](int i, int j) {
    if (i + j > 0) ++near[i + j];
  };
  for (int i = 0; i <= std::min(h, n - y); ++i) {
    for (int j = 0; j <= std::min(h - i, n - x); ++j) mark(i, j);
    for (int j = 1; j <= std::min(h - i, x - 1); ++j) mark(i, j);
  }
  for (int i = 1; i <= std::min(h, y - 1); ++i) {
    for (int j = 0; j <= std::min(h - i, n - x); ++j) mark(i, j);
    for (int j = 1; j <= std::min(h - i, x - 1); ++j) mark(i, j);
  }

  const double full = detail::weighted_count_sum(all, p.r);
  const double within = detail::weighted_count_sum(near, p.r);
  return full - within;
}

/// Direct double loop over the grid. Test oracle; accumulates in long double.
inline double kleinberg_normalizer_bruteforce(int x, int y, const KleinbergParams& p) {
  p.validate_shape();
  if (p.n > 60) throw ParamError("kleinberg_normalizer_bruteforce: n must be <= 60");
  detail::check_in_grid(x, y, p.n);
  long double sum = 0.0L;
  for (int i = 1; i <= p.n; ++i) {
    for (int j = 1; j <= p.n; ++j) {
      const int d = std::abs(i - x) + std::abs(j - y);
      if (d > p.h) sum += std::pow(static_cast<long double>(d), -static_cast<long double>(p.r));
    }
  }
  return static_cast<double>(sum);
}

/// Corner normalizer s(1,1) by diagonals: diagonal i <= n-1 holds i+1
/// nodes, diagonal n+i (i = 0..n-2) holds n-1-i nodes.
inline double s_corner_closed_form(const KleinbergParams& p) {
  p.validate_shape();
  if (p.h >= p.n - 1) throw ParamError("s_corner_closed_form: requires h < n - 1");
  double sum = 0.0;
  for (int i = p.n - 2; i >= 0; --i) sum += (p.n - 1 - i) * decay(p.n + i, p.r);
  for (int i = p.n - 1; i >= p.h + 1; --i) sum += (i + 1) * decay(i, p.r);
  return sum;
}

/// Shared normalizer of the navigable ring:
///   s = (1 + a_n) ((n - a_n)/2)^{-r} + 2 * sum_{i=k/2+1}^{(n-a_n)/2 - 1} i^{-r},
/// with a_n = n mod 2 (one antipodal node for even n, two for odd n).
inline double ring_normalizer(const NavigableRingParams& p) {
  p.validate();
  const int n = p.base.n;
  const int a_n = n % 2;
  const int far = (n - a_n) / 2;
  double sum = 0.0;
  sum += (1 + a_n) * decay(far, p.r);
  for (int i = far - 1; i >= p.base.half() + 1; --i) sum += 2.0 * decay(i, p.r);
  return sum;
}

/// Per-node normalizing constants. A ring table holds a single shared value.
struct NormalizerTable {
  enum class Model { kKleinberg, kNavigableRing };

  Model model = Model::kKleinberg;
  int n = 0;  // grid side, or ring size
  std::vector<double> values;

  /// s at grid point (x, y); 1-indexed.
  double at(int x, int y) const { return values[static_cast<std::size_t>((x - 1) * n + (y - 1))]; }
  double ring_value() const { return values.front(); }

  bool degenerate(std::size_t i) const { return !(values[i] > 0.0); }

  /// Grid: "x,y,s" header then one row per node. Ring: the single line "s,<value>".
  void write_csv(std::ostream& out) const {
    if (model == Model::kNavigableRing) {
      out << "s," << format_real(ring_value()) << '\n';
      return;
    }
    out << "x,y,s\n";
    for (int x = 1; x <= n; ++x) {
      for (int y = 1; y <= n; ++y) out << x << ',' << y << ',' << format_real(at(x, y)) << '\n';
    }
  }
};

inline NormalizerTable kleinberg_normalizer_table(const KleinbergParams& p) {
  p.validate_shape();
  NormalizerTable table;
  table.model = NormalizerTable::Model::kKleinberg;
  table.n = p.n;
  table.values.resize(static_cast<std::size_t>(p.n) * p.n);
  for (int x = 1; x <= p.n; ++x) {
    for (int y = 1; y <= p.n; ++y) table.values[(x - 1) * p.n + (y - 1)] = kleinberg_normalizer(x, y, p);
  }
  return table;
}

inline NormalizerTable ring_normalizer_table(const NavigableRingParams& p) {
  NormalizerTable table;
  table.model = NormalizerTable::Model::kNavigableRing;
  table.n = p.base.n;
  table.values = {ring_normalizer(p)};
  return table;
}

}  // namespace swcap
