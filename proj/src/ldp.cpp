#include "dpflmd/ldp.hpp"

#include <cmath>
#include <stdexcept>

namespace dpflmd {

NoiseFactor::NoiseFactor(double eta) : eta_(eta) {
  if (!(eta >= 0.0 && eta < 0.5)) {
    throw std::invalid_argument("noise factor must lie in [0, 0.5)");
  }
}

NoiseFactor noise_factor(double epsilon) {
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("epsilon must be > 0");
  }
  // exp overflows to +inf for large epsilon; 1/inf == 0 is the right limit
  return NoiseFactor(1.0 / (1.0 + std::exp(epsilon)));
}

bool randomize_bit(bool v, NoiseFactor eta, Rng& rng) {
  return rng.unit() < eta.eta() ? !v : v;
}

double debias_frequency(double observed_mean, NoiseFactor eta) {
  if (observed_mean < 0.0 || observed_mean > 1.0) {
    throw std::invalid_argument("observed mean must lie in [0,1]");
  }
  return (observed_mean - eta.eta()) / (1.0 - 2.0 * eta.eta());
}

void BudgetLedger::record_spend(std::uint64_t client_id, std::size_t response_count,
                                double epsilon) {
  if (response_count == 0) return;
  per_client_[client_id] += static_cast<double>(response_count) * epsilon;
}

double BudgetLedger::spent(std::uint64_t client_id) const {
  auto it = per_client_.find(client_id);
  return it == per_client_.end() ? 0.0 : it->second;
}

double BudgetLedger::total() const {
  double sum = 0.0;
  for (const auto& [id, eps] : per_client_) sum += eps;
  return sum;
}

}  // namespace dpflmd
