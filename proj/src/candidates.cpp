#include "dpflmd/candidates.hpp"

#include <algorithm>
#include <stdexcept>

namespace dpflmd {

namespace {

// All strings of the given length over the alphabet, in lexicographic
// (alphabet) order. length 0 yields the empty string.
std::vector<std::string> all_strings(const Alphabet& alphabet, int length) {
  std::vector<std::string> out{""};
  for (int i = 0; i < length; ++i) {
    std::vector<std::string> next;
    next.reserve(out.size() * alphabet.size());
    for (const auto& prefix : out) {
      for (char c : alphabet.symbols()) next.push_back(prefix + c);
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

CandidateSet generate_candidates(std::vector<std::string> frequent_prev, int l_min, int l,
                                 const Alphabet& alphabet) {
  if (l_min < 1) throw std::invalid_argument("l_min must be >= 1");
  if (l < l_min) throw std::invalid_argument("l must be >= l_min");

  if (l == l_min) {
    frequent_prev = all_strings(alphabet, l_min - 1);
  } else {
    std::sort(frequent_prev.begin(), frequent_prev.end());
    for (const auto& p : frequent_prev) {
      if (static_cast<int>(p.size()) != l - 1) {
        throw std::invalid_argument("previous-level pattern '" + p + "' does not have length " +
                                    std::to_string(l - 1));
      }
    }
  }

  CandidateSet set;
  set.merged.reserve(frequent_prev.size());
  set.candidates.reserve(frequent_prev.size() * alphabet.size());
  for (const auto& p : frequent_prev) {
    set.merged.push_back({p + alphabet.symbols(), l});
    for (char c : alphabet.symbols()) set.candidates.push_back(p + c);
  }
  return set;
}

std::vector<std::string> split_merged(const MergedSequence& m) {
  const int l = m.candidate_length;
  if (l < 1 || static_cast<int>(m.text.size()) < l + 1) {
    throw std::invalid_argument("malformed merged sequence '" + m.text + "' for length " +
                                std::to_string(l));
  }
  const std::string prefix = m.text.substr(0, l - 1);
  std::vector<std::string> out;
  out.reserve(m.text.size() - prefix.size());
  for (std::size_t i = prefix.size(); i < m.text.size(); ++i) {
    out.push_back(prefix + m.text[i]);
  }
  return out;
}

}  // namespace dpflmd
