#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dpflmd/client.hpp"
#include "dpflmd/consolidated.hpp"
#include "dpflmd/core.hpp"

namespace dpflmd {

enum class DatasetFormat { Plain, Fasta, UciCsv };

// "plain" | "fasta" | "uci-csv"
DatasetFormat parse_format(std::string_view name);

struct LoadOptions {
  Alphabet alphabet = Alphabet::dna();
  // Drop IUPAC ambiguity codes and gap characters instead of failing.
  // Anything else outside the alphabet is still an error.
  bool strip_ambiguous = false;
};

// plain: one sequence per line. fasta: lines between '>' headers are
// concatenated, one record per header. uci-csv: the sequence is the last
// comma-separated field, whitespace stripped. Input is uppercased;
// symbols outside the alphabet fail with line and character context.
Dataset load_dataset(const std::filesystem::path& path, DatasetFormat format,
                     const LoadOptions& options = {});

struct SyntheticSpec {
  std::size_t num_records = 0;
  std::size_t record_length = 0;
  Alphabet alphabet = Alphabet::dna();
  std::optional<std::string> planted_motif;
  double plant_rate = 0.0;  // fraction of records receiving the motif
  std::uint64_t seed = 0;
};

// Uniform random records; the motif, when given, overwrites a uniform
// random position in the first ceil(plant_rate * n) records.
Dataset generate_synthetic(const SyntheticSpec& spec);

// One sequence per line; written via temp file + rename.
void write_dataset_plain(const Dataset& dataset, const std::filesystem::path& path);

// One evaluation run, as persisted by write_results.
struct ResultRow {
  std::size_t run_id = 0;
  std::string dataset;
  double f = 0.0;
  int delta = 0;
  int l_min = 0;
  int l_max = 0;
  int top_n = 0;
  double epsilon = 0.0;
  double xi = 0.0;
  std::size_t x = 0;
  std::uint64_t seed = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double runtime_seconds = 0.0;
  double total_budget = 0.0;
  std::vector<ScoredMotif> ncfm;
};

// CSV with a fixed header plus a .json sidecar carrying each run's NCFM.
// Numeric fields use shortest round-trip formatting with '.' separator.
// Both files are written to a temp file and renamed into place.
void write_results(const std::vector<ResultRow>& rows, const std::filesystem::path& csv_path);

// NCFM as a standalone document; the mine/oracle output format that
// `eval` consumes.
nlohmann::json ncfm_to_json(const std::vector<ScoredMotif>& ncfm);
std::vector<ScoredMotif> ncfm_from_json(const nlohmann::json& j);
std::vector<ScoredMotif> read_ncfm(const std::filesystem::path& path);
void write_ncfm(const std::vector<ScoredMotif>& ncfm, const std::filesystem::path& path);

// Debug serialization of the simulator's wire messages.
nlohmann::json to_json(const QueryMessage& query);
QueryMessage query_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ResponseMessage& response);
ResponseMessage response_from_json(const nlohmann::json& j);

}  // namespace dpflmd
