#include "dpflmd/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>

#include "dpflmd/metrics.hpp"
#include "dpflmd/oracle.hpp"

namespace dpflmd {

namespace {

struct SweepPoint {
  double f;
  double epsilon;
  double xi;
  double x_value;
};

std::set<std::string> pattern_set(const std::vector<ScoredMotif>& ncfm) {
  std::set<std::string> out;
  for (const auto& m : ncfm) out.insert(m.pattern);
  return out;
}

const std::vector<double>& axis_or(const std::vector<double>& axis, const std::vector<double>& fallback) {
  return axis.empty() ? fallback : axis;
}

}  // namespace

std::size_t resolve_participants(double x_value, std::size_t dataset_size) {
  if (!(x_value > 0.0)) throw std::invalid_argument("x must be positive");
  if (x_value < 1.0) {
    const auto scaled = static_cast<std::size_t>(x_value * static_cast<double>(dataset_size));
    return std::max<std::size_t>(1, scaled);
  }
  return static_cast<std::size_t>(x_value);
}

int run_experiment(const ExperimentConfig& config) {
  if (config.repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");

  const Dataset dataset = load_dataset(config.dataset_path, config.format, config.load);
  const std::string dataset_name = config.dataset_path.filename().string();

  // enumerate sweep points; nesting order fixes the point index
  const std::vector<double> base_f{config.base.f};
  const std::vector<double> base_eps{config.base.epsilon};
  const std::vector<double> base_xi{config.base.xi};
  const std::vector<double> base_x{config.x_value};
  std::vector<SweepPoint> points;
  for (double f : axis_or(config.sweep_f, base_f)) {
    for (double eps : axis_or(config.sweep_epsilon, base_eps)) {
      for (double xi : axis_or(config.sweep_xi, base_xi)) {
        for (double xv : axis_or(config.sweep_x, base_x)) {
          points.push_back({f, eps, xi, xv});
        }
      }
    }
  }

  std::filesystem::create_directories(config.out_dir);

  // ground truth depends only on (f, delta, lengths, N) for a fixed dataset
  std::map<double, GroundTruth> truth_by_f;
  auto truth_for = [&](double f) -> const GroundTruth& {
    auto it = truth_by_f.find(f);
    if (it == truth_by_f.end()) {
      MiningParams p = config.base;
      p.f = f;
      p.x = 1;  // ignored by the oracle, kept valid
      it = truth_by_f.emplace(f, exact_mine(dataset, p)).first;
    }
    return it->second;
  };

  std::vector<ResultRow> rows;
  rows.reserve(points.size() * config.repetitions);
  bool any_failed = false;

  for (std::size_t pi = 0; pi < points.size(); ++pi) {
    const auto& pt = points[pi];
    std::vector<EvalResult> point_evals;

    for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
      MiningParams params = config.base;
      params.f = pt.f;
      params.epsilon = pt.epsilon;
      params.xi = pt.xi;
      params.x = resolve_participants(pt.x_value, dataset.size());
      params.seed = derive_seed(config.base.seed, stream_tag::run, pi, rep);

      try {
        const auto& truth = truth_for(pt.f);

        const auto t0 = std::chrono::steady_clock::now();
        const MiningResult result = run_mining(dataset, params, config.options);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - t0;

        const auto counts = confusion(pattern_set(result.ncfm), pattern_set(truth.ncfm));
        EvalResult eval{precision(counts), recall(counts), f1_score(counts), elapsed.count()};
        point_evals.push_back(eval);

        rows.push_back({rows.size(), dataset_name, params.f, params.delta, params.l_min,
                        params.l_max, params.top_n, params.epsilon, params.xi, params.x,
                        params.seed, eval.precision, eval.recall, eval.f1, eval.runtime_seconds,
                        result.ledger.total(), result.ncfm});
      } catch (const std::exception& e) {
        any_failed = true;
        std::fprintf(stderr, "run failed (point %zu, repetition %zu): %s\n", pi, rep, e.what());
      }
    }

    if (!point_evals.empty()) {
      const auto agg = aggregate_runs(point_evals);
      std::fprintf(stdout,
                   "point %zu f=%g eps=%g xi=%g x=%g: F1 %.4f +/- %.4f, runtime %.4fs +/- %.4fs "
                   "(%zu runs)\n",
                   pi, pt.f, pt.epsilon, pt.xi, pt.x_value, agg.mean.f1, agg.stddev.f1,
                   agg.mean.runtime_seconds, agg.stddev.runtime_seconds, agg.runs);
    }
  }

  write_results(rows, config.out_dir / "results.csv");
  return any_failed ? 1 : 0;
}

}  // namespace dpflmd
