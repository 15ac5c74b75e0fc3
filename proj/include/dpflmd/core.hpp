#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dpflmd {

// Ordered set of sequence symbols. symbols() is the canonical
// concatenation that gets appended to every merged-sequence prefix.
class Alphabet {
 public:
  explicit Alphabet(std::string symbols);

  static const Alphabet& dna();  // ACGT

  const std::string& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  char at(std::size_t i) const { return symbols_[i]; }
  bool contains(char c) const { return index_[uchar(c)] >= 0; }
  int index_of(char c) const { return index_[uchar(c)]; }  // -1 when absent

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

 private:
  static std::size_t uchar(char c) { return static_cast<unsigned char>(c); }

  std::string symbols_;
  std::array<int, 256> index_{};
};

// One client's private sequence (a single transaction).
struct SequenceRecord {
  std::uint64_t client_id = 0;
  std::string data;
};

// Immutable collection of client records over a shared alphabet.
class Dataset {
 public:
  Dataset(std::vector<SequenceRecord> records, Alphabet alphabet);

  const std::vector<SequenceRecord>& records() const { return records_; }
  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return records_.size(); }
  const SequenceRecord& by_client(std::uint64_t client_id) const;

 private:
  std::vector<SequenceRecord> records_;
  Alphabet alphabet_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

// User contract for one mining run. validate() rejects out-of-range
// values; nothing is ever clamped.
struct MiningParams {
  double f = 0.0;        // support threshold, (0,1]
  int delta = 0;         // Hamming tolerance, >= 0
  int l_min = 1;         // motif length bounds, 1 <= l_min <= l_max
  int l_max = 1;
  int top_n = 1;         // desired motif count, >= 1
  double epsilon = 1.0;  // per-response privacy budget, > 0
  double xi = 1.0;       // filtering error threshold, (0,1]
  std::size_t x = 1;     // participants per round; <= |D| checked at run time
  std::uint64_t seed = 0;

  void validate() const;  // throws std::invalid_argument
};

// True iff pattern occurs as a contiguous substring of seq.data.
// Throws std::invalid_argument on an empty pattern.
bool contains_substring(const SequenceRecord& seq, std::string_view pattern);

// Fraction of records containing the pattern at least once.
double support(std::string_view pattern, const Dataset& dataset);

}  // namespace dpflmd
