#include "dpflmd/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace dpflmd {

ConfusionCounts confusion(const std::set<std::string>& predicted,
                          const std::set<std::string>& truth) {
  ConfusionCounts c;
  for (const auto& p : predicted) {
    if (truth.count(p)) {
      ++c.tp;
    } else {
      ++c.fp;
    }
  }
  c.fn = truth.size() - c.tp;
  return c;
}

double precision(const ConfusionCounts& c) {
  const std::size_t denom = c.tp + c.fp;
  return denom == 0 ? 0.0 : static_cast<double>(c.tp) / static_cast<double>(denom);
}

double recall(const ConfusionCounts& c) {
  const std::size_t denom = c.tp + c.fn;
  return denom == 0 ? 0.0 : static_cast<double>(c.tp) / static_cast<double>(denom);
}

double f1_score(const ConfusionCounts& c) {
  const double p = precision(c);
  const double r = recall(c);
  return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

RunAggregate aggregate_runs(const std::vector<EvalResult>& results) {
  if (results.empty()) throw std::invalid_argument("cannot aggregate zero runs");

  const auto n = static_cast<double>(results.size());
  RunAggregate agg;
  agg.runs = results.size();
  for (const auto& r : results) {
    agg.mean.precision += r.precision;
    agg.mean.recall += r.recall;
    agg.mean.f1 += r.f1;
    agg.mean.runtime_seconds += r.runtime_seconds;
  }
  agg.mean.precision /= n;
  agg.mean.recall /= n;
  agg.mean.f1 /= n;
  agg.mean.runtime_seconds /= n;

  if (results.size() > 1) {
    EvalResult ss;
    for (const auto& r : results) {
      const auto sq = [](double d) { return d * d; };
      ss.precision += sq(r.precision - agg.mean.precision);
      ss.recall += sq(r.recall - agg.mean.recall);
      ss.f1 += sq(r.f1 - agg.mean.f1);
      ss.runtime_seconds += sq(r.runtime_seconds - agg.mean.runtime_seconds);
    }
    agg.stddev.precision = std::sqrt(ss.precision / (n - 1.0));
    agg.stddev.recall = std::sqrt(ss.recall / (n - 1.0));
    agg.stddev.f1 = std::sqrt(ss.f1 / (n - 1.0));
    agg.stddev.runtime_seconds = std::sqrt(ss.runtime_seconds / (n - 1.0));
  }
  return agg;
}

}  // namespace dpflmd
