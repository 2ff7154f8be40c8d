#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "swcap/bounds.hpp"
#include "swcap/format.hpp"
#include "swcap/generators.hpp"
#include "swcap/mincut.hpp"
#include "swcap/parallel.hpp"
#include "swcap/rng.hpp"

namespace swcap {

using ModelParams = std::variant<ShortcutParams, RewiringParams, KleinbergParams, NavigableRingParams>;

inline Model model_of(const ModelParams& m) {
  return static_cast<Model>(m.index());
}

/// Sets the model's sweep axis: p for shortcuts/rewiring, q for the
/// Kleinberg grid and navigable ring.
inline ModelParams with_sweep_value(ModelParams m, double x) {
  std::visit(
      [x](auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, ShortcutParams> || std::is_same_v<P, RewiringParams>) {
          p.p = x;
        } else {
          if (x < 0 || x != static_cast<int>(x)) throw ParamError("q sweep values must be non-negative integers");
          p.q = static_cast<int>(x);
        }
      },
      m);
  return m;
}

inline double sweep_value_of(const ModelParams& m) {
  return std::visit(
      [](const auto& p) -> double {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, ShortcutParams> || std::is_same_v<P, RewiringParams>) {
          return p.p;
        } else {
          return p.q;
        }
      },
      m);
}

inline void validate(const ModelParams& m) {
  std::visit([](const auto& p) { p.validate(); }, m);
}

inline BoundsReport bounds_for(const ModelParams& m, ConfidenceParam d) {
  return std::visit(
      [d](const auto& p) -> BoundsReport {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, ShortcutParams>) return bounds_shortcuts(p, d);
        else if constexpr (std::is_same_v<P, RewiringParams>) return bounds_rewiring(p, d);
        else if constexpr (std::is_same_v<P, KleinbergParams>) return bounds_kleinberg(p, d);
        else return bounds_navigable_ring(p, d);
      },
      m);
}

/// Reusable seeded instance generator for one parameter point.
inline std::function<WeightedGraph(Seed)> instance_generator(const ModelParams& m) {
  return std::visit(
      [](const auto& p) -> std::function<WeightedGraph(Seed)> {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, ShortcutParams>) {
          return [p](Seed s) { return gen_shortcut_smallworld(p, s); };
        } else if constexpr (std::is_same_v<P, RewiringParams>) {
          return [p](Seed s) { return gen_rewired_smallworld(p, s); };
        } else if constexpr (std::is_same_v<P, KleinbergParams>) {
          auto sampler = std::make_shared<const KleinbergSampler>(p);
          return [sampler](Seed s) { return gen_kleinberg(*sampler, s); };
        } else {
          auto sampler = std::make_shared<const RingSampler>(p);
          return [sampler](Seed s) { return gen_navigable_ring(*sampler, s); };
        }
      },
      m);
}

/// Whether c_s respects the model's deterministic bound: c_s <= k under
/// rewiring, c_s >= k with added shortcuts, c_s >= h(h+3)/2 + q on the grid.
/// Only the grid check can fail legitimately (repeated trial endpoints).
inline bool satisfies_deterministic_bound(const ModelParams& m, double c_s) {
  return std::visit(
      [c_s](const auto& p) -> bool {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, RewiringParams>) return c_s <= p.base.k;
        else if constexpr (std::is_same_v<P, KleinbergParams>) return c_s >= p.lattice_degree_at_corner() + p.q;
        else return c_s >= p.base.k;
      },
      m);
}

inline bool deterministic_bound_is_guaranteed(const ModelParams& m) {
  return !std::holds_alternative<KleinbergParams>(m);
}

struct ExperimentConfig {
  ModelParams model;
  ConfidenceParam d;
  std::size_t trials = 100;
  Seed seed;
  /// Values for the sweep axis; empty means the single point in `model`.
  std::vector<double> sweep;
  /// Trials that have not started when this many seconds have elapsed are
  /// skipped and the summary is flagged partial.
  std::optional<double> time_budget_seconds;
  bool keep_records = false;

  void validate() const {
    if (trials < 1) throw ParamError("trials must be >= 1");
    d.validate();
    if (sweep.empty()) {
      swcap::validate(model);
    } else {
      for (double x : sweep) swcap::validate(with_sweep_value(model, x));
    }
  }
};

struct TrialRecord {
  double sweep_value = 0.0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  double c_s = 0.0;
  bool in_interval = false;
  bool in_tight_interval = false;
  /// Rewiring only: c_s <= k.
  bool below_tight_upper = false;
};

struct CoverageRow {
  double x = 0.0;
  BoundsReport bounds;
  std::size_t trials = 0;
  double coverage = 0.0;
  double tight_coverage = 0.0;
  double mean_c_s = 0.0;
  double min_c_s = 0.0;
  double max_c_s = 0.0;
  double deterministic_fraction = 0.0;
};

struct CoverageSummary {
  Model model = Model::kShortcuts;
  std::vector<CoverageRow> rows;
  std::vector<TrialRecord> records;
  bool partial = false;
  /// False if a guaranteed deterministic bound was violated by any trial.
  bool deterministic_ok = true;

  static constexpr const char* csv_header =
      "model,n,k,p,h,q,r,d,x,trials,c_w,epsilon,lower,upper,tight_lower,coverage,tight_coverage,"
      "mean_c_s,min_c_s,max_c_s,deterministic_fraction,partial";

  void write_csv(std::ostream& out) const {
    out << csv_header << '\n';
    for (const auto& row : rows) {
      const auto& b = row.bounds;
      out << model_name(model) << ',' << b.params.csv() << ',' << format_real(b.d) << ',' << format_real(row.x)
          << ',' << row.trials << ',' << format_real(b.c_w) << ',' << format_real(b.epsilon) << ','
          << format_real(b.lower) << ',' << format_real(b.upper) << ',' << format_real(b.tight_lower) << ','
          << format_real(row.coverage) << ',' << format_real(row.tight_coverage) << ','
          << format_real(row.mean_c_s) << ',' << format_real(row.min_c_s) << ',' << format_real(row.max_c_s)
          << ',' << format_real(row.deterministic_fraction) << ',' << format_bool(partial) << '\n';
    }
  }
};

/// Absolute slack for interval membership of integer-valued c_s.
inline constexpr double kIntervalSlack = 1e-9;

/// Samples `trials` instances per sweep value, computes each exact global
/// min cut and checks it against the model's bounds. Trial t of sweep index
/// i uses seed derive_seed(master, {i, t}).
inline CoverageSummary run_concentration(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::vector<double> xs = cfg.sweep.empty() ? std::vector<double>{sweep_value_of(cfg.model)} : cfg.sweep;
  const auto start = std::chrono::steady_clock::now();

  CoverageSummary summary;
  summary.model = model_of(cfg.model);
  for (std::size_t si = 0; si < xs.size(); ++si) {
    const ModelParams point = with_sweep_value(cfg.model, xs[si]);
    const BoundsReport bounds = bounds_for(point, cfg.d);
    const auto generate = instance_generator(point);

    std::vector<double> cuts(cfg.trials, std::numeric_limits<double>::quiet_NaN());
    std::vector<std::uint64_t> seeds(cfg.trials);
    parallel_for(cfg.trials, [&](std::size_t t) {
      seeds[t] = derive_seed(cfg.seed.value, {si, t});
      if (cfg.time_budget_seconds) {
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        if (elapsed.count() > *cfg.time_budget_seconds) return;
      }
      cuts[t] = global_min_cut(generate(Seed{seeds[t]})).value;
    });

    CoverageRow row;
    row.x = xs[si];
    row.bounds = bounds;
    row.min_c_s = std::numeric_limits<double>::infinity();
    row.max_c_s = -std::numeric_limits<double>::infinity();
    std::size_t in = 0, in_tight = 0, det = 0;
    double sum = 0.0;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const double c = cuts[t];
      if (std::isnan(c)) {
        summary.partial = true;
        continue;
      }
      ++row.trials;
      TrialRecord rec;
      rec.sweep_value = xs[si];
      rec.trial = t;
      rec.seed = seeds[t];
      rec.c_s = c;
      rec.in_interval = c >= bounds.lower - kIntervalSlack && c <= bounds.upper + kIntervalSlack;
      rec.in_tight_interval = c >= bounds.tight_lower - kIntervalSlack && c <= bounds.upper + kIntervalSlack;
      rec.below_tight_upper = summary.model == Model::kRewiring && c <= bounds.upper + kIntervalSlack;
      const bool det_ok = satisfies_deterministic_bound(point, c);
      in += rec.in_interval;
      in_tight += rec.in_tight_interval;
      det += det_ok;
      if (!det_ok && deterministic_bound_is_guaranteed(point)) summary.deterministic_ok = false;
      sum += c;
      row.min_c_s = std::min(row.min_c_s, c);
      row.max_c_s = std::max(row.max_c_s, c);
      if (cfg.keep_records) summary.records.push_back(rec);
    }
    if (row.trials > 0) {
      const auto done = static_cast<double>(row.trials);
      row.coverage = in / done;
      row.tight_coverage = in_tight / done;
      row.mean_c_s = sum / done;
      row.deterministic_fraction = det / done;
    } else {
      row.min_c_s = row.max_c_s = std::numeric_limits<double>::quiet_NaN();
    }
    summary.rows.push_back(row);
  }
  return summary;
}

enum class FigureKind { kFig4, kFig6, kFig7 };

struct FigureOptions {
  /// Replaces n (ring size, or grid side for fig6).
  std::optional<int> scale;
  /// Adds a mean_c_s column from sampled instances.
  bool empirical = false;
  std::size_t trials = 20;
  Seed seed;
  ConfidenceParam d;
};

/// Plot-ready bound curves with the captioned defaults:
///   fig4  shortcuts   n=1000 k=20        x = p in {0, 0.05, ..., 1}
///   fig6  kleinberg   n=80 h=2 r=2       x = q in {0..10}
///   fig7  navigable   n=1600 k=14 r=1    x = q in {0..10}
/// Columns x,c_w,lower,upper[,mean_c_s]; lower is the clamped lower bound for
/// fig4 and the model's tight lower bound for fig6/fig7. With --empirical and
/// no explicit scale, sampling runs at desk scale (n=200, or side 24).
inline void figure_data(FigureKind which, const FigureOptions& opt, std::ostream& out) {
  opt.d.validate();
  if (opt.empirical && opt.trials < 1) throw ParamError("figure: trials must be >= 1");
  std::optional<int> n = opt.scale;
  if (!n && opt.empirical) n = which == FigureKind::kFig6 ? 24 : 200;

  ModelParams base;
  std::vector<double> xs;
  std::string caption;
  switch (which) {
    case FigureKind::kFig4:
      base = ShortcutParams{{n.value_or(1000), 20}, 0.0};
      for (int i = 0; i <= 20; ++i) xs.push_back(i / 20.0);
      caption = "fig4 shortcuts n=1000 k=20 d=1";
      break;
    case FigureKind::kFig6:
      base = KleinbergParams{n.value_or(80), 2, 0, 2.0};
      for (int q = 0; q <= 10; ++q) xs.push_back(q);
      caption = "fig6 kleinberg n=80 (1600 nodes) h=2 r=2 d=1";
      break;
    case FigureKind::kFig7:
      base = NavigableRingParams{{n.value_or(1600), 14}, 0, 1.0};
      for (int q = 0; q <= 10; ++q) xs.push_back(q);
      caption = "fig7 navigable n=1600 k=14 r=1 d=1";
      break;
  }
  validate(with_sweep_value(base, xs.front()));

  std::optional<NormalizerTable> table;
  if (const auto* grid = std::get_if<KleinbergParams>(&base)) table = kleinberg_normalizer_table(*grid);

  out << "# caption: " << caption << '\n';
  out << "# evaluated: " << model_name(model_of(base)) << ' ' << ParamColumns::header << " = "
      << bounds_for(with_sweep_value(base, xs.front()), opt.d).params.csv() << " d=" << format_real(opt.d.d)
      << '\n';
  out << "x,c_w,lower,upper" << (opt.empirical ? ",mean_c_s" : "") << '\n';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const ModelParams point = with_sweep_value(base, xs[i]);
    const BoundsReport b = table ? bounds_kleinberg(std::get<KleinbergParams>(point), *table, opt.d)
                                 : bounds_for(point, opt.d);
    const double lower = which == FigureKind::kFig4 ? b.lower : b.tight_lower;
    out << format_real(xs[i]) << ',' << format_real(b.c_w) << ',' << format_real(lower) << ','
        << format_real(b.upper);
    if (opt.empirical) {
      ExperimentConfig cfg;
      cfg.model = point;
      cfg.d = opt.d;
      cfg.trials = opt.trials;
      cfg.seed = Seed{derive_seed(opt.seed.value, {i})};
      out << ',' << format_real(run_concentration(cfg).rows.front().mean_c_s);
    }
    out << '\n';
  }
}

}  // namespace swcap
