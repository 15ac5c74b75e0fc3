#include "dpflmd/client.hpp"

#include <stdexcept>
#include <string>

#include "dpflmd/error.hpp"

namespace dpflmd {

namespace {

// True bits for the candidates of one merged payload.
void true_bits(const SequenceRecord& local, const MergedSequence& m, ContainmentMode mode,
               std::vector<std::uint8_t>& out) {
  const std::string_view text(local.data);
  const std::string_view prefix = std::string_view(m.text).substr(0, m.candidate_length - 1);
  const std::string_view tail = std::string_view(m.text).substr(prefix.size());

  const std::size_t prefix_pos = prefix.empty() ? 0 : text.find(prefix);
  if (prefix_pos == std::string_view::npos) {
    // prefix absent: no extension can occur, in either mode
    out.insert(out.end(), tail.size(), 0);
    return;
  }

  if (mode == ContainmentMode::Exact) {
    std::string candidate = std::string(prefix) + ' ';
    for (char c : tail) {
      candidate.back() = c;
      out.push_back(text.find(candidate) != std::string_view::npos ? 1 : 0);
    }
  } else {
    // first occurrence of the prefix ends at prefix_pos + |prefix| - 1;
    // only the remaining suffix is consulted for the final symbol
    const std::size_t suffix_start = prefix.empty() ? 0 : prefix_pos + prefix.size();
    const std::string_view suffix = text.substr(suffix_start);
    for (char c : tail) {
      out.push_back(suffix.find(c) != std::string_view::npos ? 1 : 0);
    }
  }
}

}  // namespace

ResponseMessage answer_query(const SequenceRecord& local, const Alphabet& alphabet,
                             const QueryMessage& query, Rng& rng, ContainmentMode mode) {
  if (query.round_length < 1) {
    throw ProtocolError("query round length must be >= 1");
  }

  ResponseMessage response;
  response.client_id = local.client_id;
  response.bits.reserve(query.merged.size() * alphabet.size());

  std::vector<std::uint8_t> raw;
  raw.reserve(query.merged.size() * alphabet.size());
  for (const auto& m : query.merged) {
    if (m.candidate_length != query.round_length) {
      throw ProtocolError("merged sequence length does not match the round length");
    }
    if (m.text.size() != static_cast<std::size_t>(m.candidate_length - 1) + alphabet.size() ||
        m.text.substr(m.text.size() - alphabet.size()) != alphabet.symbols()) {
      throw ProtocolError("merged sequence '" + m.text + "' does not match the alphabet");
    }
    true_bits(local, m, mode, raw);
  }

  for (std::uint8_t r : raw) {
    response.bits.push_back(randomize_bit(r != 0, query.eta, rng) ? 1 : 0);
  }
  return response;
}

bool participant_response(std::string_view local_view, std::string_view pattern, NoiseFactor eta,
                          Rng& rng) {
  if (pattern.empty()) throw std::invalid_argument("pattern must be non-empty");
  const bool present = local_view.find(pattern) != std::string_view::npos;
  return randomize_bit(present, eta, rng);
}

}  // namespace dpflmd
