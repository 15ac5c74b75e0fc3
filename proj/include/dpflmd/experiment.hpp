#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "dpflmd/io.hpp"
#include "dpflmd/server.hpp"

namespace dpflmd {

// One evaluation campaign: sweep axes are cross-multiplied, absent axes
// fall back to the base value, and every point runs `repetitions` times
// with seeds derived from (master seed, point index, repetition index).
struct ExperimentConfig {
  std::filesystem::path dataset_path;
  DatasetFormat format = DatasetFormat::Plain;
  LoadOptions load;
  MiningParams base;      // base.x is ignored; x_value decides participants
  double x_value = 0.5;   // >= 1: absolute count; in (0,1): fraction of |D|
  std::size_t repetitions = 100;
  std::vector<double> sweep_f;
  std::vector<double> sweep_epsilon;
  std::vector<double> sweep_xi;
  std::vector<double> sweep_x;
  std::filesystem::path out_dir = ".";
  MiningOptions options;
};

// Fractions round down with a minimum of one participant.
std::size_t resolve_participants(double x_value, std::size_t dataset_size);

// Runs every sweep point x repetition, writes results.csv/.json under
// out_dir, and prints one mean +/- stddev summary line per point. Ground
// truth is computed once per support threshold and shared across points
// that only vary privacy parameters. Returns a process exit status:
// nonzero when any run failed; partial results are still written.
int run_experiment(const ExperimentConfig& config);

}  // namespace dpflmd
