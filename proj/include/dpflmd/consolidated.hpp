#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace dpflmd {

// length -> pattern -> frequency, the server's frequent-pattern state.
using FrequentByLength = std::map<int, std::map<std::string, double>>;

// Number of positions at which two equal-length strings differ.
// Throws std::invalid_argument on a length mismatch.
int hamming(std::string_view s, std::string_view p);

// Within delta and not identical; the self term enters the consolidated
// sum separately.
bool is_approximate(std::string_view s, std::string_view p, int delta);

// Patterns filed by Hamming distance from a reference (the
// lexicographically first pattern of the set).
struct HammingBuckets {
  std::string reference;
  std::map<int, std::vector<std::string>> buckets;
};

HammingBuckets bucketize(std::vector<std::string> patterns);

struct ScoredMotif {
  std::string pattern;
  double frequency = 0.0;  // promotion-round noisy frequency (exact support in the oracle)
  double cf = 0.0;         // frequency plus the frequencies of all delta-neighbors
};

// Score every frequent pattern of each length. The triangle inequality
// around the bucket reference limits neighbor checks to buckets within
// delta of a pattern's own bucket; the result is identical to the
// all-pairs sum.
std::map<int, std::vector<ScoredMotif>> consolidated_frequencies(
    const FrequentByLength& frequent, int l_min, int l_max, int delta);

// The n highest-cf motifs. Ties broken by higher frequency, then by
// pattern, so selection is deterministic.
std::vector<ScoredMotif> top_n(std::vector<ScoredMotif> scored, std::size_t n);

}  // namespace dpflmd
