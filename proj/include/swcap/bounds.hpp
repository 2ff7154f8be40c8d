#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <string>

#include "swcap/format.hpp"
#include "swcap/normalizers.hpp"
#include "swcap/params.hpp"

namespace swcap {

enum class Model { kShortcuts, kRewiring, kKleinberg, kNavigableRing };

inline const char* model_name(Model m) {
  switch (m) {
    case Model::kShortcuts: return "shortcuts";
    case Model::kRewiring: return "rewiring";
    case Model::kKleinberg: return "kleinberg";
    case Model::kNavigableRing: return "navigable";
  }
  return "?";
}

/// Exponent d of the deviation probability O(1/N^d).
struct ConfidenceParam {
  double d = 1.0;

  void validate() const {
    if (!(d > 0.0) || !std::isfinite(d)) throw ParamError("confidence parameter d must be > 0");
  }
};

/// Parameter columns shared by all CSV outputs: n,k,p,h,q,r (blank if unused).
struct ParamColumns {
  std::optional<int> n, k;
  std::optional<double> p;
  std::optional<int> h, q;
  std::optional<double> r;

  static constexpr const char* header = "n,k,p,h,q,r";

  static ParamColumns of(const ShortcutParams& p) { return {p.base.n, p.base.k, p.p, {}, {}, {}}; }
  static ParamColumns of(const RewiringParams& p) { return {p.base.n, p.base.k, p.p, {}, {}, {}}; }
  static ParamColumns of(const KleinbergParams& p) { return {p.n, {}, {}, p.h, p.q, p.r}; }
  static ParamColumns of(const NavigableRingParams& p) { return {p.base.n, p.base.k, {}, {}, p.q, p.r}; }

  std::string csv() const {
    auto i = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
    auto f = [](const std::optional<double>& v) { return v ? format_real(*v) : std::string(); };
    return i(n) + ',' + i(k) + ',' + f(p) + ',' + i(h) + ',' + i(q) + ',' + f(r);
  }
};

struct BoundsReport {
  Model model = Model::kShortcuts;
  ParamColumns params;
  double d = 1.0;
  double c_w = 0.0;
  double epsilon = 0.0;
  /// (1 - epsilon) * c_w (rewiring: (1 - epsilon) * k); may be negative.
  double lower_raw = 0.0;
  /// lower_raw clamped at 0.
  double lower = 0.0;
  double upper = 0.0;
  /// Model-specific lower bound: M for Kleinberg, max{k, lower_raw} for the
  /// navigable ring, `lower` otherwise.
  double tight_lower = 0.0;
  /// Set iff epsilon > 1.
  bool clamped = false;

  static constexpr const char* csv_header = "model,n,k,p,h,q,r,d,c_w,epsilon,lower,upper,tight_lower,clamped";

  std::string csv_row() const {
    return std::string(model_name(model)) + ',' + params.csv() + ',' + format_real(d) + ',' +
           format_real(c_w) + ',' + format_real(epsilon) + ',' + format_real(lower) + ',' +
           format_real(upper) + ',' + format_real(tight_lower) + ',' + format_bool(clamped);
  }
};

/// Global min cut of the complete graph with lattice weight w1 and
/// non-lattice weight w2: k w1 + (n-1-k) w2.
inline double lemma1_mincut(int n, int k, double w1, double w2) {
  RingLatticeParams{n, k}.validate();
  if (!(w1 >= 0.0) || !(w2 >= 0.0)) throw ParamError("weights must be >= 0");
  return k * w1 + (n - 1 - k) * w2;
}

/// Concentration half-width sqrt(2 (d+2) ln(N) / c_w), N the node count.
inline double epsilon(ConfidenceParam d, long long node_count, double c_w) {
  d.validate();
  if (node_count < 2) throw ParamError("epsilon: node count must be >= 2");
  if (!(c_w > 0.0)) throw ParamError("epsilon: c_w must be > 0");
  return std::sqrt(2.0 * (d.d + 2.0) * std::log(static_cast<double>(node_count)) / c_w);
}

namespace detail {

inline BoundsReport symmetric_report(Model m, ParamColumns cols, ConfidenceParam d, double c_w,
                                     long long node_count) {
  BoundsReport rep;
  rep.model = m;
  rep.params = cols;
  rep.d = d.d;
  rep.c_w = c_w;
  rep.epsilon = epsilon(d, node_count, c_w);
  rep.lower_raw = (1.0 - rep.epsilon) * c_w;
  rep.lower = std::max(0.0, rep.lower_raw);
  rep.upper = (1.0 + rep.epsilon) * c_w;
  rep.tight_lower = rep.lower;
  rep.clamped = rep.epsilon > 1.0;
  return rep;
}

}  // namespace detail

inline double cw_shortcuts(const ShortcutParams& p) {
  p.validate();
  return p.base.k + (p.base.n - 1 - p.base.k) * p.p;
}

inline BoundsReport bounds_shortcuts(const ShortcutParams& p, ConfidenceParam d) {
  return detail::symmetric_report(Model::kShortcuts, ParamColumns::of(p), d, cw_shortcuts(p), p.base.n);
}

/// Interval [(1-eps) k, k] with eps = sqrt(2(d+2) ln(n) / k); independent of p.
inline BoundsReport bounds_rewiring(const RewiringParams& p, ConfidenceParam d) {
  p.validate();
  const double k = p.base.k;
  BoundsReport rep;
  rep.model = Model::kRewiring;
  rep.params = ParamColumns::of(p);
  rep.d = d.d;
  // c_w >= k; only the floor k enters the interval.
  rep.c_w = k;
  rep.epsilon = epsilon(d, p.base.n, k);
  rep.lower_raw = (1.0 - rep.epsilon) * k;
  rep.lower = std::max(0.0, rep.lower_raw);
  rep.upper = k;
  rep.tight_lower = rep.lower;
  rep.clamped = rep.epsilon > 1.0;
  return rep;
}

/// Outer-sum range of the corner cut formula.
enum class CornerSumRange {
  /// y from h+3-x: only nodes at distance > h (not already in the lattice term).
  kDistanceConsistent,
  /// y from h+2-x as printed; also re-counts the distance-h diagonal.
  kAsPrinted,
};

/// Expected-graph min cut of the Kleinberg grid, evaluated as the weighted
/// degree of the corner (1,1):
///   h(h+3)/2 + sum f(x,y),  f = q (g_{(x,y)}(1,1) + g_{(1,1)}(x,y)),
///   g(a,b) = (1 - D/s(a,b))^{q-1} D/s(a,b),  D = (x+y-2)^{-r}.
/// s(1,1) comes from the diagonal closed form, other s(x,y) from the
/// normalizer table. Nodes with s = 0 contribute 0.
inline double cw_kleinberg(const KleinbergParams& p, const NormalizerTable& table,
                           CornerSumRange range = CornerSumRange::kDistanceConsistent) {
  p.validate();
  if (table.model != NormalizerTable::Model::kKleinberg || table.n != p.n)
    throw ParamError("cw_kleinberg: normalizer table does not match the grid");
  const int n = p.n;
  const int h = p.h;
  const int q = p.q;
  const double s11 = s_corner_closed_form(p);

  auto g = [&](double dist_term, double s) {
    if (!(s > 0.0)) return 0.0;
    const double a = dist_term / s;
    return std::pow(1.0 - a, q - 1) * a;
  };
  auto f = [&](int x, int y) {
    if (q == 0) return 0.0;
    const double dist_term = decay(x + y - 2, p.r);
    return q * (g(dist_term, s11) + g(dist_term, table.at(x, y)));
  };

  double sum = 0.0;
  const int offset = range == CornerSumRange::kDistanceConsistent ? 3 : 2;
  for (int x = 1; x <= h + 1; ++x) {
    for (int y = h + offset - x; y <= n; ++y) sum += f(x, y);
  }
  for (int x = h + 2; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) sum += f(x, y);
  }
  return p.lattice_degree_at_corner() + sum;
}

inline double cw_kleinberg(const KleinbergParams& p,
                           CornerSumRange range = CornerSumRange::kDistanceConsistent) {
  p.validate();
  return cw_kleinberg(p, kleinberg_normalizer_table(p), range);
}

/// [M, (1+eps) c_w] with eps over ln(n^2) and M = max{h(h+3)/2 + q, (1-eps) c_w}.
inline BoundsReport bounds_kleinberg(const KleinbergParams& p, const NormalizerTable& table, ConfidenceParam d,
                                     CornerSumRange range = CornerSumRange::kDistanceConsistent) {
  auto rep = detail::symmetric_report(Model::kKleinberg, ParamColumns::of(p), d, cw_kleinberg(p, table, range),
                                      static_cast<long long>(p.n) * p.n);
  rep.tight_lower = std::max(static_cast<double>(p.lattice_degree_at_corner() + p.q), rep.lower_raw);
  return rep;
}

inline BoundsReport bounds_kleinberg(const KleinbergParams& p, ConfidenceParam d,
                                     CornerSumRange range = CornerSumRange::kDistanceConsistent) {
  p.validate();
  return bounds_kleinberg(p, kleinberg_normalizer_table(p), d, range);
}

/// Closed form of the navigable ring's expected-graph min cut:
///   k + 2^{rq+1} s^{-q} q (1+a_n)(n-a_n)^{-r} (2^{-r} s - (n-a_n)^{-r})^{q-1}
///     + 4 q s^{-q} sum_{i=k/2+1}^{(n-a_n)/2-1} i^{-r} (s - i^{-r})^{q-1}.
inline double cw_navigable_ring(const NavigableRingParams& p) {
  const double s = ring_normalizer(p);
  const int n = p.base.n;
  const int k = p.base.k;
  const int q = p.q;
  const double r = p.r;
  if (q == 0) return k;
  const int a_n = n % 2;
  const double far = n - a_n;
  const double s_q = std::pow(s, -q);

  const double antipodal = std::pow(2.0, r * q + 1) * s_q * q * (1 + a_n) * std::pow(far, -r) *
                           std::pow(std::pow(2.0, -r) * s - std::pow(far, -r), q - 1);
  double middle = 0.0;
  for (int i = (n - a_n) / 2 - 1; i >= p.base.half() + 1; --i) {
    const double t = decay(i, r);
    middle += t * std::pow(s - t, q - 1);
  }
  return k + antipodal + 4.0 * q * s_q * middle;
}

/// [max{k, (1-eps) c_w}, (1+eps) c_w], eps over ln(n).
inline BoundsReport bounds_navigable_ring(const NavigableRingParams& p, ConfidenceParam d) {
  auto rep = detail::symmetric_report(Model::kNavigableRing, ParamColumns::of(p), d, cw_navigable_ring(p),
                                      p.base.n);
  rep.tight_lower = std::max(static_cast<double>(p.base.k), rep.lower_raw);
  return rep;
}

}  // namespace swcap
