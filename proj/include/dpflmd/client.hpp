#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "dpflmd/candidates.hpp"
#include "dpflmd/core.hpp"
#include "dpflmd/ldp.hpp"

namespace dpflmd {

// How a client decides the true bit for a candidate.
//
// Exact: the candidate occurs contiguously in the local sequence.
// FirstOccurrence: locate the first occurrence of the shared prefix,
// then test only whether each final symbol appears anywhere after it.
// Cheaper, but can answer 1 for candidates that never occur contiguously;
// kept as a compatibility mode.
enum class ContainmentMode { Exact, FirstOccurrence };

// What the server sends: the round's merged payloads plus the noise level
// clients must apply. Nothing else about the mining state is revealed.
struct QueryMessage {
  int round_length = 0;  // l
  std::vector<MergedSequence> merged;
  NoiseFactor eta{0.0};
};

struct ResponseMessage {
  std::uint64_t client_id = 0;
  std::vector<std::uint8_t> bits;  // one noisy bit per candidate, canonical order
};

// Answer every candidate encoded in the query with a randomized bit.
// Exactly |merged| * |A| bits are emitted regardless of local content, so
// message length leaks nothing. Throws ProtocolError when a payload does
// not match the client's alphabet or the round length.
ResponseMessage answer_query(const SequenceRecord& local, const Alphabet& alphabet,
                             const QueryMessage& query, Rng& rng,
                             ContainmentMode mode = ContainmentMode::Exact);

// Single-pattern randomized response: the containment indicator passed
// through randomize_bit.
bool participant_response(std::string_view local_view, std::string_view pattern,
                          NoiseFactor eta, Rng& rng);

}  // namespace dpflmd
