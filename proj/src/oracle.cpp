#include "dpflmd/oracle.hpp"

#include <stdexcept>

#include "dpflmd/candidates.hpp"

namespace dpflmd {

GroundTruth exact_mine(const Dataset& dataset, const MiningParams& params) {
  params.validate();

  GroundTruth truth;
  std::vector<std::string> prev;
  for (int l = params.l_min; l <= params.l_max; ++l) {
    const auto set = generate_candidates(prev, params.l_min, l, dataset.alphabet());
    std::map<std::string, double> frequent;
    for (const auto& candidate : set.candidates) {
      const double s = support(candidate, dataset);
      if (s >= params.f) frequent.emplace(candidate, s);
    }
    prev.clear();
    prev.reserve(frequent.size());
    for (const auto& [pattern, s] : frequent) prev.push_back(pattern);
    truth.frequent_by_length[l] = std::move(frequent);
  }

  std::vector<ScoredMotif> all;
  for (const auto& [l, supports] : truth.frequent_by_length) {
    const auto cf = brute_force_cf(supports, params.delta);
    for (const auto& [pattern, s] : supports) {
      all.push_back({pattern, s, cf.at(pattern)});
    }
  }
  truth.ncfm = top_n(std::move(all), static_cast<std::size_t>(params.top_n));
  return truth;
}

std::map<std::string, double> brute_force_cf(const std::map<std::string, double>& supports,
                                             int delta) {
  if (!supports.empty()) {
    const std::size_t length = supports.begin()->first.size();
    for (const auto& [pattern, s] : supports) {
      if (pattern.size() != length) {
        throw std::invalid_argument("consolidated frequencies need uniform-length patterns");
      }
    }
  }
  std::map<std::string, double> cf;
  for (const auto& [p1, s1] : supports) {
    double sum = s1;  // the self term
    for (const auto& [p2, s2] : supports) {
      if (p2 == p1) continue;
      if (hamming(p1, p2) <= delta) sum += s2;
    }
    cf.emplace(p1, sum);
  }
  return cf;
}

}  // namespace dpflmd
