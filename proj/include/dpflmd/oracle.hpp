#pragma once

#include <map>
#include <string>
#include <vector>

#include "dpflmd/consolidated.hpp"
#include "dpflmd/core.hpp"

namespace dpflmd {

// Exact mining output; the evaluation baseline.
struct GroundTruth {
  FrequentByLength frequent_by_length;  // exact supports
  std::vector<ScoredMotif> ncfm;
};

// Non-private, non-sampled miner. Shares the candidate enumeration with
// the federated path but computes exact supports; the privacy fields of
// params (epsilon, xi, x, seed) are ignored.
GroundTruth exact_mine(const Dataset& dataset, const MiningParams& params);

// All-pairs consolidated frequencies over equal-length patterns; the
// independent check for the bucket-pruned path.
std::map<std::string, double> brute_force_cf(const std::map<std::string, double>& supports,
                                             int delta);

}  // namespace dpflmd
