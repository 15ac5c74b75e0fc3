#pragma once

#include <cstdint>
#include <map>

#include "dpflmd/rng.hpp"

namespace dpflmd {

// Bit-flip probability of randomized response.
class NoiseFactor {
 public:
  explicit NoiseFactor(double eta);  // requires 0 <= eta < 0.5
  double eta() const { return eta_; }

 private:
  double eta_ = 0.0;
};

// eta = 1 / (1 + e^epsilon): the flip rate at which one randomized
// response satisfies epsilon-LDP.
NoiseFactor noise_factor(double epsilon);

// Flip v with probability eta. Consumes exactly one draw from rng.
bool randomize_bit(bool v, NoiseFactor eta, Rng& rng);

// Inverse of the randomized-response expectation map
// E[observed] = f*(1-eta) + (1-f)*eta. The result is not clipped; it can
// leave [0,1] for small samples and callers decide what to do then.
double debias_frequency(double observed_mean, NoiseFactor eta);

// Cumulative per-response budget spend per client. Bookkeeping only:
// nothing is enforced.
class BudgetLedger {
 public:
  void record_spend(std::uint64_t client_id, std::size_t response_count, double epsilon);
  double spent(std::uint64_t client_id) const;
  double total() const;
  const std::map<std::uint64_t, double>& per_client() const { return per_client_; }

 private:
  std::map<std::uint64_t, double> per_client_;
};

}  // namespace dpflmd
