#include "dpflmd/consolidated.hpp"

#include <algorithm>
#include <stdexcept>

namespace dpflmd {

int hamming(std::string_view s, std::string_view p) {
  if (s.size() != p.size()) {
    throw std::invalid_argument("hamming distance needs equal-length strings");
  }
  int d = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != p[i]) ++d;
  }
  return d;
}

bool is_approximate(std::string_view s, std::string_view p, int delta) {
  return s != p && hamming(s, p) <= delta;
}

HammingBuckets bucketize(std::vector<std::string> patterns) {
  if (patterns.empty()) throw std::invalid_argument("cannot bucketize an empty pattern set");
  std::sort(patterns.begin(), patterns.end());
  HammingBuckets b;
  b.reference = patterns.front();
  for (const auto& p : patterns) {
    b.buckets[hamming(b.reference, p)].push_back(p);
  }
  return b;
}

std::map<int, std::vector<ScoredMotif>> consolidated_frequencies(const FrequentByLength& frequent,
                                                                 int l_min, int l_max, int delta) {
  std::map<int, std::vector<ScoredMotif>> out;
  for (int l = l_min; l <= l_max; ++l) {
    auto it = frequent.find(l);
    if (it == frequent.end() || it->second.empty()) continue;
    const auto& freqs = it->second;  // lexicographic by key

    // bucket index per pattern, relative to the lexicographically first one
    const std::string& reference = freqs.begin()->first;
    std::vector<std::string_view> names;
    std::vector<int> bucket;
    std::vector<double> values;
    names.reserve(freqs.size());
    bucket.reserve(freqs.size());
    values.reserve(freqs.size());
    for (const auto& [pattern, freq] : freqs) {
      names.push_back(pattern);
      bucket.push_back(hamming(reference, pattern));
      values.push_back(freq);
    }

    auto& scored = out[l];
    scored.reserve(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
      // |d(ref,p1) - d(ref,p2)| <= d(p1,p2), so neighbors of p1 live in
      // buckets within delta of p1's own bucket
      const int lo = std::max(0, bucket[i] - delta);
      const int hi = std::min(bucket[i] + delta, l);
      double cf = values[i];
      for (std::size_t j = 0; j < names.size(); ++j) {
        if (j == i || bucket[j] < lo || bucket[j] > hi) continue;
        if (hamming(names[i], names[j]) <= delta) cf += values[j];
      }
      scored.push_back({std::string(names[i]), values[i], cf});
    }
  }
  return out;
}

std::vector<ScoredMotif> top_n(std::vector<ScoredMotif> scored, std::size_t n) {
  if (n < 1) throw std::invalid_argument("top_n needs n >= 1");
  std::sort(scored.begin(), scored.end(), [](const ScoredMotif& a, const ScoredMotif& b) {
    if (a.cf != b.cf) return a.cf > b.cf;
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    return a.pattern < b.pattern;
  });
  if (scored.size() > n) scored.resize(n);
  return scored;
}

}  // namespace dpflmd
