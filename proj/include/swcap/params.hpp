#pragma once

#include <cmath>
#include <string>

#include "swcap/graph.hpp"

namespace swcap {

struct RingLatticeParams {
  int n = 0;
  int k = 0;

  int half() const { return k / 2; }

  void validate() const {
    if (k < 2 || k % 2 != 0) throw ParamError("k must be an even integer >= 2");
    if (k > n - 2) throw ParamError("k must satisfy k <= n - 2");
  }
};

inline void validate_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParamError(std::string(name) + " must lie in [0, 1]");
}

struct ShortcutParams {
  RingLatticeParams base;
  double p = 0.0;

  void validate() const {
    base.validate();
    validate_probability(p, "p");
  }
};

/// Candidate set used when a lattice edge is rewired.
enum class RewireTargets {
  /// Any node other than u that is not adjacent to u in the current graph.
  kNotAdjacent,
  /// Any node not adjacent to u in the original lattice; a pick that is
  /// already adjacent collapses into the existing edge.
  kNotInLattice,
};

struct RewiringParams {
  RingLatticeParams base;
  double p = 0.0;
  RewireTargets targets = RewireTargets::kNotAdjacent;

  void validate() const {
    base.validate();
    validate_probability(p, "p");
  }
};

/// n x n grid, initial radius h, q shortcut trials per node, decay exponent r.
struct KleinbergParams {
  int n = 0;
  int h = 1;
  int q = 0;
  double r = 0.0;

  int node_count() const { return n * n; }
  int lattice_degree_at_corner() const { return h * (h + 3) / 2; }

  /// Enough structure to evaluate normalizing constants (any h >= 0).
  void validate_shape() const {
    if (n < 2) throw ParamError("grid side n must be >= 2");
    if (h < 0) throw ParamError("h must be >= 0");
    if (!(r >= 0.0) || !std::isfinite(r)) throw ParamError("r must be finite and >= 0");
  }

  void validate() const {
    validate_shape();
    if (h < 1) throw ParamError("h must be >= 1");
    if (h >= n - 1) throw ParamError("h must satisfy h < n - 1");
    if (q < 0) throw ParamError("q must be >= 0");
  }
};

struct NavigableRingParams {
  RingLatticeParams base;
  int q = 0;
  double r = 0.0;

  void validate() const {
    base.validate();
    if (base.k >= base.n - 1) throw ParamError("k must satisfy k < n - 1");
    if (q < 0) throw ParamError("q must be >= 0");
    if (!(r >= 0.0) || !std::isfinite(r)) throw ParamError("r must be finite and >= 0");
  }
};

}  // namespace swcap
