#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dpflmd/client.hpp"
#include "dpflmd/consolidated.hpp"
#include "dpflmd/core.hpp"
#include "dpflmd/ldp.hpp"

namespace dpflmd {

// Per-candidate aggregation of one round's noisy responses.
struct ResponseTally {
  std::string candidate;
  std::size_t ones = 0;   // noisy 1-bits received
  std::size_t total = 0;  // responses collected
};

struct CorrectedThreshold {
  double theta = 0.0;
};

// theta = f + eta - 2*f*eta + sqrt(-ln(xi) / (2x)): the noisy acceptance
// rate above which a candidate is frequent with confidence 1 - xi.
CorrectedThreshold corrected_threshold(double f, NoiseFactor eta, double xi, std::size_t x);

// ones/total >= theta. Throws ProtocolError unless the tally holds
// exactly expected_total responses.
bool is_frequent(const ResponseTally& tally, CorrectedThreshold threshold,
                 std::size_t expected_total);

// Uniform sample of x client ids without replacement, ascending.
std::vector<std::uint64_t> sample_participants(const Dataset& clients, std::size_t x, Rng& rng);

struct RoundRecord {
  int round_index = 0;
  int length = 0;                    // l
  std::size_t candidate_count = 0;   // |C|
  std::size_t merged_count = 0;      // |MC|, query payloads actually sent
  double theta = 0.0;
  std::size_t participant_count = 0;
  std::size_t promoted_count = 0;
  double cumulative_epsilon = 0.0;
};

// The server's evolving state across rounds.
struct Profile {
  FrequentByLength frequent_by_length;
  std::vector<RoundRecord> round_log;
};

struct MiningOptions {
  ContainmentMode containment = ContainmentMode::Exact;
  bool debias = false;   // store debiased instead of raw noisy frequencies
  bool verbose = false;  // per-round log line on stderr
};

// One federated round for pattern length l: generate candidates from the
// previous level, sample participants, dispatch queries, tally responses,
// and promote candidates that clear the corrected threshold. Returns the
// promoted patterns with their stored frequencies.
std::map<std::string, double> run_round(int l, const std::vector<std::string>& frequent_prev,
                                        const Dataset& dataset, const MiningParams& params,
                                        const MiningOptions& options, int round_index,
                                        Profile& profile, BudgetLedger& ledger);

struct MiningResult {
  std::vector<ScoredMotif> ncfm;
  Profile profile;
  BudgetLedger ledger;
};

// Full protocol: rounds for l_min..l_max, then consolidated scoring and
// top-N selection. Deterministic in (dataset, params, options).
MiningResult run_mining(const Dataset& dataset, const MiningParams& params,
                        const MiningOptions& options = {});

}  // namespace dpflmd
