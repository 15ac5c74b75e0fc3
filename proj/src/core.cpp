#include "dpflmd/core.hpp"

#include <stdexcept>
#include <string>

namespace dpflmd {

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.size() < 2) {
    throw std::invalid_argument("alphabet needs at least two symbols");
  }
  index_.fill(-1);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const auto u = uchar(symbols_[i]);
    if (index_[u] >= 0) {
      throw std::invalid_argument(std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
    }
    index_[u] = static_cast<int>(i);
  }
}

const Alphabet& Alphabet::dna() {
  static const Alphabet a("ACGT");
  return a;
}

Dataset::Dataset(std::vector<SequenceRecord> records, Alphabet alphabet)
    : records_(std::move(records)), alphabet_(std::move(alphabet)) {
  if (records_.empty()) {
    throw std::invalid_argument("dataset must contain at least one record");
  }
  index_.reserve(records_.size());
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const auto& rec = records_[i];
    if (rec.data.empty()) {
      throw std::invalid_argument("record " + std::to_string(rec.client_id) + " is empty");
    }
    for (char c : rec.data) {
      if (!alphabet_.contains(c)) {
        throw std::invalid_argument("record " + std::to_string(rec.client_id) +
                                    " contains symbol '" + c + "' outside the alphabet");
      }
    }
    if (!index_.emplace(rec.client_id, i).second) {
      throw std::invalid_argument("duplicate client id " + std::to_string(rec.client_id));
    }
  }
}

const SequenceRecord& Dataset::by_client(std::uint64_t client_id) const {
  auto it = index_.find(client_id);
  if (it == index_.end()) {
    throw std::invalid_argument("unknown client id " + std::to_string(client_id));
  }
  return records_[it->second];
}

void MiningParams::validate() const {
  if (!(f > 0.0 && f <= 1.0)) throw std::invalid_argument("f must be in (0,1]");
  if (delta < 0) throw std::invalid_argument("delta must be >= 0");
  if (l_min < 1 || l_min > l_max) throw std::invalid_argument("need 1 <= l_min <= l_max");
  if (top_n < 1) throw std::invalid_argument("top_n must be >= 1");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  if (!(xi > 0.0 && xi <= 1.0)) throw std::invalid_argument("xi must be in (0,1]");
  if (x < 1) throw std::invalid_argument("x must be >= 1");
}

bool contains_substring(const SequenceRecord& seq, std::string_view pattern) {
  if (pattern.empty()) throw std::invalid_argument("pattern must be non-empty");
  return std::string_view(seq.data).find(pattern) != std::string_view::npos;
}

double support(std::string_view pattern, const Dataset& dataset) {
  if (pattern.empty()) throw std::invalid_argument("pattern must be non-empty");
  std::size_t count = 0;
  for (const auto& rec : dataset.records()) {
    if (std::string_view(rec.data).find(pattern) != std::string_view::npos) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(dataset.size());
}

}  // namespace dpflmd
