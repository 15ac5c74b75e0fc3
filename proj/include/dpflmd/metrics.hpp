#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace dpflmd {

struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::optional<std::size_t> tn;  // only meaningful against an enumerable universe
};

ConfusionCounts confusion(const std::set<std::string>& predicted,
                          const std::set<std::string>& truth);

double precision(const ConfusionCounts& c);
double recall(const ConfusionCounts& c);
double f1_score(const ConfusionCounts& c);  // 0 on the degenerate all-zero case

struct EvalResult {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double runtime_seconds = 0.0;  // wall clock of the mining call
};

struct RunAggregate {
  EvalResult mean;
  EvalResult stddev;  // sample standard deviation; 0 for a single run
  std::size_t runs = 0;
};

// Field-wise mean and sample stddev. Throws on an empty list.
RunAggregate aggregate_runs(const std::vector<EvalResult>& results);

}  // namespace dpflmd
