#pragma once

#include <string>
#include <vector>

#include "dpflmd/core.hpp"

namespace dpflmd {

// A shared (l-1)-prefix with the whole alphabet appended: one query
// payload encoding |A| sibling candidates that differ only in the last
// character.
struct MergedSequence {
  std::string text;  // prefix + alphabet concatenation
  int candidate_length = 0;
};

struct CandidateSet {
  std::vector<std::string> candidates;  // |merged| * |A|, canonical order
  std::vector<MergedSequence> merged;
};

// Extend each (l-1)-pattern by every alphabet symbol. frequent_prev is
// taken in lexicographic order; when l == l_min it is replaced by all
// (l_min - 1)-strings over the alphabet (the empty string for l_min = 1).
// Throws std::invalid_argument when l < l_min or a pattern has the wrong
// length.
CandidateSet generate_candidates(std::vector<std::string> frequent_prev, int l_min, int l,
                                 const Alphabet& alphabet);

// Inverse of merging: the candidates encoded by m, in alphabet order.
std::vector<std::string> split_merged(const MergedSequence& m);

}  // namespace dpflmd
