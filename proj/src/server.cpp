#include "dpflmd/server.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "dpflmd/candidates.hpp"
#include "dpflmd/error.hpp"

namespace dpflmd {

CorrectedThreshold corrected_threshold(double f, NoiseFactor eta, double xi, std::size_t x) {
  if (!(f > 0.0 && f <= 1.0)) throw std::invalid_argument("f must be in (0,1]");
  if (!(xi > 0.0 && xi <= 1.0)) throw std::invalid_argument("xi must be in (0,1]");
  if (x < 1) throw std::invalid_argument("x must be >= 1");
  const double e = eta.eta();
  const double hoeffding = std::sqrt(-std::log(xi) / (2.0 * static_cast<double>(x)));
  return {f + e - 2.0 * f * e + hoeffding};
}

bool is_frequent(const ResponseTally& tally, CorrectedThreshold threshold,
                 std::size_t expected_total) {
  if (tally.total != expected_total) {
    throw ProtocolError("tally for '" + tally.candidate + "' holds " +
                        std::to_string(tally.total) + " of " + std::to_string(expected_total) +
                        " responses");
  }
  return static_cast<double>(tally.ones) / static_cast<double>(tally.total) >= threshold.theta;
}

std::vector<std::uint64_t> sample_participants(const Dataset& clients, std::size_t x, Rng& rng) {
  const std::size_t n = clients.size();
  if (x < 1 || x > n) throw std::invalid_argument("x must lie in [1, |D|]");

  // partial Fisher-Yates over record indices
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::uint64_t> picked;
  picked.reserve(x);
  for (std::size_t i = 0; i < x; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(idx[i], idx[j]);
    picked.push_back(clients.records()[idx[i]].client_id);
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

std::map<std::string, double> run_round(int l, const std::vector<std::string>& frequent_prev,
                                        const Dataset& dataset, const MiningParams& params,
                                        const MiningOptions& options, int round_index,
                                        Profile& profile, BudgetLedger& ledger) {
  const auto set = generate_candidates(frequent_prev, params.l_min, l, dataset.alphabet());
  const NoiseFactor eta = noise_factor(params.epsilon);
  const CorrectedThreshold threshold = corrected_threshold(params.f, eta, params.xi, params.x);

  std::map<std::string, double> promoted;
  std::size_t participant_count = 0;

  if (!set.candidates.empty()) {
    Rng sampler(derive_seed(params.seed, stream_tag::sampling, round_index, 0));
    const auto participants = sample_participants(dataset, params.x, sampler);
    participant_count = participants.size();

    const QueryMessage query{l, set.merged, eta};
    std::vector<std::size_t> ones(set.candidates.size(), 0);
    for (std::uint64_t id : participants) {
      Rng stream(derive_seed(params.seed, stream_tag::client, round_index, id));
      const auto response =
          answer_query(dataset.by_client(id), dataset.alphabet(), query, stream, options.containment);
      for (std::size_t k = 0; k < response.bits.size(); ++k) ones[k] += response.bits[k];
      ledger.record_spend(id, response.bits.size(), params.epsilon);
    }

    for (std::size_t k = 0; k < set.candidates.size(); ++k) {
      const ResponseTally tally{set.candidates[k], ones[k], participants.size()};
      if (is_frequent(tally, threshold, params.x)) {
        const double raw = static_cast<double>(tally.ones) / static_cast<double>(tally.total);
        promoted[set.candidates[k]] = options.debias ? debias_frequency(raw, eta) : raw;
      }
    }
  }

  profile.round_log.push_back({round_index, l, set.candidates.size(), set.merged.size(),
                               threshold.theta, participant_count, promoted.size(),
                               ledger.total()});
  if (options.verbose) {
    std::fprintf(stderr, "round %d l=%d |C|=%zu |MC|=%zu theta=%.6f promoted=%zu eps_total=%.3f\n",
                 round_index, l, set.candidates.size(), set.merged.size(), threshold.theta,
                 promoted.size(), ledger.total());
  }
  return promoted;
}

MiningResult run_mining(const Dataset& dataset, const MiningParams& params,
                        const MiningOptions& options) {
  params.validate();
  if (params.x > dataset.size()) {
    throw std::invalid_argument("x exceeds the number of clients");
  }

  MiningResult result;
  std::vector<std::string> prev;
  for (int l = params.l_min; l <= params.l_max; ++l) {
    const int round_index = l - params.l_min;
    auto promoted =
        run_round(l, prev, dataset, params, options, round_index, result.profile, result.ledger);
    prev.clear();
    prev.reserve(promoted.size());
    for (const auto& [pattern, freq] : promoted) prev.push_back(pattern);
    result.profile.frequent_by_length[l] = std::move(promoted);
  }

  const auto scored = consolidated_frequencies(result.profile.frequent_by_length, params.l_min,
                                               params.l_max, params.delta);
  std::vector<ScoredMotif> all;
  for (const auto& [l, motifs] : scored) {
    all.insert(all.end(), motifs.begin(), motifs.end());
  }
  result.ncfm = top_n(std::move(all), static_cast<std::size_t>(params.top_n));
  return result;
}

}  // namespace dpflmd
