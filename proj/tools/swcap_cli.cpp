// Command-line front end: graph generation, exact min cut, capacity bounds,
// Monte Carlo experiments and figure data.
//
// Exit status: 0 success, 2 parameter/usage error, 3 experiment assertion failure.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swcap/swcap.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParam = 2;
constexpr int kExitAssertion = 3;

const std::map<std::string, swcap::Model> kBoundModels = {
    {"shortcuts", swcap::Model::kShortcuts},
    {"rewiring", swcap::Model::kRewiring},
    {"kleinberg", swcap::Model::kKleinberg},
    {"navigable", swcap::Model::kNavigableRing},
};

struct ModelOptions {
  std::string model;
  std::optional<int> n;
  int k = 10;
  double p = 0.1;
  int h = 1;
  int q = 1;
  double r = 1.0;
  bool pure_definition_targets = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("-n", n, "Ring size, or grid side for kleinberg (default 200 / 24)");
    cmd->add_option("-k", k, "Lattice degree (even)")->capture_default_str();
    cmd->add_option("-p", p, "Shortcut / rewiring probability")->capture_default_str();
    cmd->add_option("-h,--radius", h, "Kleinberg initial radius")->capture_default_str();
    cmd->add_option("-q", q, "Shortcut trials per node")->capture_default_str();
    cmd->add_option("-r", r, "Distance decay exponent")->capture_default_str();
    cmd->add_flag("--lattice-targets", pure_definition_targets,
                  "Rewiring: draw targets from all non-lattice nodes (may collapse edges)");
  }

  swcap::RingLatticeParams ring() const { return {n.value_or(200), k}; }

  swcap::ModelParams params() const {
    using namespace swcap;
    const Model m = kBoundModels.at(model);
    switch (m) {
      case Model::kShortcuts: return ShortcutParams{ring(), p};
      case Model::kRewiring:
        return RewiringParams{ring(), p,
                              pure_definition_targets ? RewireTargets::kNotInLattice : RewireTargets::kNotAdjacent};
      case Model::kKleinberg: return KleinbergParams{n.value_or(24), h, q, r};
      case Model::kNavigableRing: return NavigableRingParams{ring(), q, r};
    }
    throw ParamError("unknown model");
  }
};

void disable_short_help(CLI::App* app) { app->set_help_flag("--help", "Print this help message and exit"); }

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw swcap::ParamError("cannot parse sweep value '" + item + "'");
    }
  }
  return values;
}

/// Opens `path` for writing, or returns std::cout for "" / "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw swcap::ParamError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

}  // namespace

int main(int argc, char** argv) {
  using namespace swcap;

  CLI::App app{"Small-world network capacity toolkit"};
  disable_short_help(&app);
  app.require_subcommand(1);

  // gen
  ModelOptions gen_opts;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a graph instance as JSON");
  disable_short_help(gen);
  gen->add_option("model", gen_opts.model, "ring|shortcuts|rewiring|kleinberg|navigable")
      ->required()
      ->check(CLI::IsMember({"ring", "shortcuts", "rewiring", "kleinberg", "navigable"}));
  gen_opts.attach(gen);
  gen->add_option("--seed", gen_seed, "Master seed")->capture_default_str();
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  // mincut
  std::string mincut_in;
  bool mincut_brute = false;
  auto* mincut = app.add_subcommand("mincut", "Exact global minimum cut of a JSON graph");
  disable_short_help(mincut);
  mincut->add_option("--in", mincut_in, "Input file (default stdin)");
  mincut->add_flag("--brute-force", mincut_brute, "Use the exhaustive oracle (<= 20 nodes)");

  // bounds
  ModelOptions bounds_opts;
  double bounds_d = 1.0;
  bool bounds_printed_range = false;
  auto* bounds = app.add_subcommand("bounds", "Closed-form capacity bounds as CSV");
  disable_short_help(bounds);
  bounds->add_option("model", bounds_opts.model, "shortcuts|rewiring|kleinberg|navigable")
      ->required()
      ->check(CLI::IsMember({"shortcuts", "rewiring", "kleinberg", "navigable"}));
  bounds_opts.attach(bounds);
  bounds->add_option("-d", bounds_d, "Confidence exponent")->capture_default_str();
  bounds->add_flag("--printed-range", bounds_printed_range,
                   "Kleinberg: evaluate the corner sum over the range y >= h+2-x");

  // normalizers
  ModelOptions norm_opts;
  std::string norm_out;
  auto* norm = app.add_subcommand("normalizers", "Normalizing constants as CSV");
  disable_short_help(norm);
  norm->add_option("model", norm_opts.model, "kleinberg|navigable")
      ->required()
      ->check(CLI::IsMember({"kleinberg", "navigable"}));
  norm_opts.attach(norm);
  norm->add_option("--out", norm_out, "Output file (default stdout)");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Monte Carlo experiments");
  disable_short_help(experiment);
  experiment->require_subcommand(1);

  ModelOptions conc_opts;
  std::size_t conc_trials = 100;
  std::uint64_t conc_seed = 0;
  double conc_d = 1.0;
  std::string conc_sweep;
  std::optional<double> conc_budget;
  std::string conc_records;
  auto* conc = experiment->add_subcommand("concentration", "Coverage of the capacity interval");
  disable_short_help(conc);
  conc->add_option("model", conc_opts.model, "shortcuts|rewiring|kleinberg|navigable")
      ->required()
      ->check(CLI::IsMember({"shortcuts", "rewiring", "kleinberg", "navigable"}));
  conc_opts.attach(conc);
  conc->add_option("--trials", conc_trials, "Instances per sweep value")->capture_default_str();
  conc->add_option("--seed", conc_seed, "Master seed")->capture_default_str();
  conc->add_option("-d", conc_d, "Confidence exponent")->capture_default_str();
  conc->add_option("--sweep", conc_sweep, "Comma-separated p (or q) values");
  conc->add_option("--budget", conc_budget, "Time budget in seconds; later trials are skipped");
  conc->add_option("--records", conc_records, "Write per-trial records as CSV to this file");

  ModelOptions route_opts;
  std::size_t route_trials = 1000;
  std::uint64_t route_seed = 0;
  std::string route_trace;
  auto* route = experiment->add_subcommand("routing", "Greedy delivery-time statistics");
  disable_short_help(route);
  route->add_option("model", route_opts.model, "navigable|kleinberg")
      ->required()
      ->check(CLI::IsMember({"navigable", "kleinberg"}));
  route_opts.attach(route);
  route->add_option("--trials", route_trials, "Routed pairs (one fresh graph each)")->capture_default_str();
  route->add_option("--seed", route_seed, "Master seed")->capture_default_str();
  route->add_option("--trace", route_trace, "Write per-trial traces as JSON lines to this file");

  // figure
  std::string fig_name;
  std::optional<int> fig_scale;
  bool fig_empirical = false;
  std::size_t fig_trials = 20;
  std::uint64_t fig_seed = 0;
  double fig_d = 1.0;
  auto* figure = app.add_subcommand("figure", "Bound curves for plotting");
  disable_short_help(figure);
  figure->add_option("which", fig_name, "fig4|fig6|fig7")->required()->check(CLI::IsMember({"fig4", "fig6", "fig7"}));
  figure->add_option("--scale", fig_scale, "Substitute n (grid side for fig6)");
  figure->add_flag("--empirical", fig_empirical, "Add sampled mean c_s column");
  figure->add_option("--trials", fig_trials, "Samples per point with --empirical")->capture_default_str();
  figure->add_option("--seed", fig_seed, "Master seed")->capture_default_str();
  figure->add_option("-d", fig_d, "Confidence exponent")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParam;
  }

  try {
    if (gen->parsed()) {
      WeightedGraph g;
      const Seed seed{gen_seed};
      if (gen_opts.model == "ring") {
        g = gen_ring_lattice(gen_opts.ring());
      } else {
        g = std::visit(
            [seed](const auto& p) -> WeightedGraph {
              using P = std::decay_t<decltype(p)>;
              if constexpr (std::is_same_v<P, ShortcutParams>) return gen_shortcut_smallworld(p, seed);
              else if constexpr (std::is_same_v<P, RewiringParams>) return gen_rewired_smallworld(p, seed);
              else if constexpr (std::is_same_v<P, KleinbergParams>) return gen_kleinberg(p, seed);
              else return gen_navigable_ring(p, seed);
            },
            gen_opts.params());
      }
      Output out(gen_out);
      write_graph_json(g, out.stream());
      return kExitOk;
    }

    if (mincut->parsed()) {
      WeightedGraph g;
      if (mincut_in.empty() || mincut_in == "-") {
        g = read_graph_json(std::cin);
      } else {
        std::ifstream in(mincut_in);
        if (!in) throw ParamError("cannot open input file " + mincut_in);
        g = read_graph_json(in);
      }
      const CutResult cut = mincut_brute ? brute_force_min_cut(g) : global_min_cut(g);
      std::cout << "value " << format_real(cut.value) << "\npartition";
      for (NodeId v : cut.partition) std::cout << ' ' << v;
      std::cout << '\n';
      return kExitOk;
    }

    if (bounds->parsed()) {
      const ConfidenceParam d{bounds_d};
      const ModelParams params = bounds_opts.params();
      BoundsReport rep;
      if (const auto* grid = std::get_if<KleinbergParams>(&params)) {
        rep = bounds_kleinberg(*grid, d,
                               bounds_printed_range ? CornerSumRange::kAsPrinted : CornerSumRange::kDistanceConsistent);
      } else {
        rep = bounds_for(params, d);
      }
      std::cout << BoundsReport::csv_header << '\n' << rep.csv_row() << '\n';
      return kExitOk;
    }

    if (norm->parsed()) {
      const ModelParams params = norm_opts.params();
      Output out(norm_out);
      if (const auto* grid = std::get_if<KleinbergParams>(&params)) {
        grid->validate_shape();
        kleinberg_normalizer_table(*grid).write_csv(out.stream());
      } else {
        ring_normalizer_table(std::get<NavigableRingParams>(params)).write_csv(out.stream());
      }
      return kExitOk;
    }

    if (conc->parsed()) {
      ExperimentConfig cfg;
      cfg.model = conc_opts.params();
      cfg.d = ConfidenceParam{conc_d};
      cfg.trials = conc_trials;
      cfg.seed = Seed{conc_seed};
      cfg.sweep = conc_sweep.empty() ? std::vector<double>{} : parse_list(conc_sweep);
      cfg.time_budget_seconds = conc_budget;
      cfg.keep_records = !conc_records.empty();
      const CoverageSummary summary = run_concentration(cfg);
      summary.write_csv(std::cout);
      if (!conc_records.empty()) {
        Output rec(conc_records);
        rec.stream() << "x,trial,seed,c_s,in_interval,in_tight_interval,below_tight_upper\n";
        for (const auto& r : summary.records) {
          rec.stream() << format_real(r.sweep_value) << ',' << r.trial << ',' << r.seed << ',' << format_real(r.c_s)
                       << ',' << format_bool(r.in_interval) << ',' << format_bool(r.in_tight_interval) << ','
                       << format_bool(r.below_tight_upper) << '\n';
        }
      }
      if (!summary.deterministic_ok) {
        std::cerr << "assertion failed: a sampled instance violated the model's deterministic bound\n";
        return kExitAssertion;
      }
      return kExitOk;
    }

    if (route->parsed()) {
      const ModelParams params = route_opts.params();
      RoutingModel model;
      if (const auto* ring = std::get_if<NavigableRingParams>(&params)) model = *ring;
      else model = std::get<KleinbergParams>(params);
      std::optional<Output> trace;
      DeliveryOptions options;
      if (!route_trace.empty()) {
        trace.emplace(route_trace);
        options.trace_out = &trace->stream();
      }
      const DeliveryStats stats = delivery_experiment(model, route_trials, Seed{route_seed}, options);
      const ParamColumns cols =
          std::visit([](const auto& p) { return ParamColumns::of(p); }, model);
      std::cout << DeliveryStats::csv_header << '\n'
                << model_name(std::holds_alternative<KleinbergParams>(model) ? Model::kKleinberg
                                                                             : Model::kNavigableRing)
                << ',' << cols.csv() << ',' << stats.trials << ',' << format_real(stats.mean_hops) << ','
                << stats.max_hops << ',' << (stats.bound ? format_real(*stats.bound) : "") << ','
                << (stats.bound ? format_bool(stats.bound_satisfied) : "") << '\n';
      if (stats.undelivered > 0 || stats.non_monotone > 0) {
        std::cerr << "assertion failed: " << stats.undelivered << " undelivered, " << stats.non_monotone
                  << " non-monotone traces\n";
        return kExitAssertion;
      }
      if (!stats.bound_satisfied) {
        std::cerr << "assertion failed: mean hops exceed the navigability bound\n";
        return kExitAssertion;
      }
      return kExitOk;
    }

    if (figure->parsed()) {
      FigureOptions opt;
      opt.scale = fig_scale;
      opt.empirical = fig_empirical;
      opt.trials = fig_trials;
      opt.seed = Seed{fig_seed};
      opt.d = ConfidenceParam{fig_d};
      const FigureKind which = fig_name == "fig4"   ? FigureKind::kFig4
                               : fig_name == "fig6" ? FigureKind::kFig6
                                                    : FigureKind::kFig7;
      figure_data(which, opt, std::cout);
      return kExitOk;
    }
  } catch (const ParamError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParam;
  }
  return kExitParam;
}
