#include "dpflmd/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "dpflmd/error.hpp"
#include "dpflmd/rng.hpp"

namespace dpflmd {

namespace {

// IUPAC ambiguity codes plus gap characters, removable via LoadOptions.
bool is_strippable(char c) {
  switch (c) {
    case 'N': case 'R': case 'Y': case 'S': case 'W': case 'K':
    case 'M': case 'B': case 'D': case 'H': case 'V':
    case '-': case '.':
      return true;
    default:
      return false;
  }
}

std::string clean_sequence(std::string_view raw, const LoadOptions& options, std::size_t line_no) {
  std::string out;
  out.reserve(raw.size());
  for (char ch : raw) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (options.alphabet.contains(c)) {
      out.push_back(c);
    } else if (options.strip_ambiguous && is_strippable(c)) {
      continue;
    } else {
      throw LoadError("line " + std::to_string(line_no) + ": unexpected symbol '" +
                      std::string(1, ch) + "'");
    }
  }
  return out;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

bool is_blank(std::string_view s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// shortest representation that round-trips
std::string fmt_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_atomically(const std::filesystem::path& path, const std::string& body) {
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw LoadError("cannot write " + tmp);
    out << body;
    if (!out) throw LoadError("write failed for " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw LoadError("cannot rename " + tmp + " to " + path.string() + ": " + ec.message());
}

}  // namespace

DatasetFormat parse_format(std::string_view name) {
  if (name == "plain") return DatasetFormat::Plain;
  if (name == "fasta") return DatasetFormat::Fasta;
  if (name == "uci-csv") return DatasetFormat::UciCsv;
  throw std::invalid_argument("unknown dataset format '" + std::string(name) + "'");
}

Dataset load_dataset(const std::filesystem::path& path, DatasetFormat format,
                     const LoadOptions& options) {
  const auto lines = read_lines(path);
  std::vector<SequenceRecord> records;
  std::uint64_t next_id = 0;

  auto add_record = [&](std::string data, std::size_t line_no) {
    if (data.empty()) {
      throw LoadError("line " + std::to_string(line_no) + ": record is empty");
    }
    records.push_back({next_id++, std::move(data)});
  };

  switch (format) {
    case DatasetFormat::Plain: {
      for (std::size_t i = 0; i < lines.size(); ++i) {
        if (is_blank(lines[i])) continue;
        add_record(clean_sequence(lines[i], options, i + 1), i + 1);
      }
      break;
    }
    case DatasetFormat::Fasta: {
      std::string current;
      std::size_t header_line = 0;
      bool in_record = false;
      for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (!line.empty() && line.front() == '>') {
          if (in_record) add_record(std::move(current), header_line);
          current.clear();
          in_record = true;
          header_line = i + 1;
        } else if (is_blank(line)) {
          continue;
        } else {
          if (!in_record) {
            throw LoadError("line " + std::to_string(i + 1) + ": sequence data before any header");
          }
          current += clean_sequence(line, options, i + 1);
        }
      }
      if (in_record) add_record(std::move(current), header_line);
      break;
    }
    case DatasetFormat::UciCsv: {
      for (std::size_t i = 0; i < lines.size(); ++i) {
        if (is_blank(lines[i])) continue;
        const auto pos = lines[i].rfind(',');
        const std::string_view field =
            pos == std::string::npos ? std::string_view(lines[i])
                                     : std::string_view(lines[i]).substr(pos + 1);
        add_record(clean_sequence(field, options, i + 1), i + 1);
      }
      break;
    }
  }

  if (records.empty()) throw LoadError("no records in " + path.string());
  return Dataset(std::move(records), options.alphabet);
}

Dataset generate_synthetic(const SyntheticSpec& spec) {
  if (spec.num_records < 1) throw std::invalid_argument("need at least one record");
  if (spec.record_length < 1) throw std::invalid_argument("record length must be >= 1");
  if (!(spec.plant_rate >= 0.0 && spec.plant_rate <= 1.0)) {
    throw std::invalid_argument("plant rate must lie in [0,1]");
  }
  if (spec.planted_motif) {
    if (spec.planted_motif->empty() || spec.planted_motif->size() > spec.record_length) {
      throw std::invalid_argument("planted motif must fit inside a record");
    }
    for (char c : *spec.planted_motif) {
      if (!spec.alphabet.contains(c)) {
        throw std::invalid_argument("planted motif uses symbols outside the alphabet");
      }
    }
  }

  Rng rng(derive_seed(spec.seed, stream_tag::synthetic, spec.num_records, spec.record_length));
  std::vector<SequenceRecord> records;
  records.reserve(spec.num_records);
  for (std::size_t i = 0; i < spec.num_records; ++i) {
    std::string data(spec.record_length, '\0');
    for (auto& c : data) c = spec.alphabet.at(rng.below(spec.alphabet.size()));
    records.push_back({i, std::move(data)});
  }

  if (spec.planted_motif && spec.plant_rate > 0.0) {
    const auto planted = static_cast<std::size_t>(
        std::ceil(spec.plant_rate * static_cast<double>(spec.num_records)));
    const std::size_t slots = spec.record_length - spec.planted_motif->size() + 1;
    for (std::size_t i = 0; i < planted && i < spec.num_records; ++i) {
      const std::size_t pos = rng.below(slots);
      records[i].data.replace(pos, spec.planted_motif->size(), *spec.planted_motif);
    }
  }
  return Dataset(std::move(records), spec.alphabet);
}

void write_dataset_plain(const Dataset& dataset, const std::filesystem::path& path) {
  std::string body;
  for (const auto& rec : dataset.records()) {
    body += rec.data;
    body += '\n';
  }
  write_atomically(path, body);
}

void write_results(const std::vector<ResultRow>& rows, const std::filesystem::path& csv_path) {
  std::string csv =
      "run_id,dataset,f,delta,l_min,l_max,N,epsilon,xi,x,seed,precision,recall,f1,"
      "runtime_seconds,total_budget\n";
  for (const auto& r : rows) {
    csv += std::to_string(r.run_id) + ',' + r.dataset + ',' + fmt_double(r.f) + ',' +
           std::to_string(r.delta) + ',' + std::to_string(r.l_min) + ',' +
           std::to_string(r.l_max) + ',' + std::to_string(r.top_n) + ',' +
           fmt_double(r.epsilon) + ',' + fmt_double(r.xi) + ',' + std::to_string(r.x) + ',' +
           std::to_string(r.seed) + ',' + fmt_double(r.precision) + ',' + fmt_double(r.recall) +
           ',' + fmt_double(r.f1) + ',' + fmt_double(r.runtime_seconds) + ',' +
           fmt_double(r.total_budget) + '\n';
  }
  write_atomically(csv_path, csv);

  nlohmann::json sidecar = nlohmann::json::array();
  for (const auto& r : rows) {
    sidecar.push_back({{"run_id", r.run_id}, {"seed", r.seed}, {"ncfm", ncfm_to_json(r.ncfm)["ncfm"]}});
  }
  auto json_path = csv_path;
  json_path.replace_extension(".json");
  write_atomically(json_path, sidecar.dump(2) + "\n");
}

nlohmann::json ncfm_to_json(const std::vector<ScoredMotif>& ncfm) {
  nlohmann::json motifs = nlohmann::json::array();
  for (const auto& m : ncfm) {
    motifs.push_back({{"pattern", m.pattern}, {"frequency", m.frequency}, {"cf", m.cf}});
  }
  return {{"ncfm", std::move(motifs)}};
}

std::vector<ScoredMotif> ncfm_from_json(const nlohmann::json& j) {
  std::vector<ScoredMotif> out;
  for (const auto& m : j.at("ncfm")) {
    out.push_back({m.at("pattern").get<std::string>(), m.at("frequency").get<double>(),
                   m.at("cf").get<double>()});
  }
  return out;
}

std::vector<ScoredMotif> read_ncfm(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw LoadError("cannot parse " + path.string() + ": " + e.what());
  }
  return ncfm_from_json(j);
}

void write_ncfm(const std::vector<ScoredMotif>& ncfm, const std::filesystem::path& path) {
  write_atomically(path, ncfm_to_json(ncfm).dump(2) + "\n");
}

nlohmann::json to_json(const QueryMessage& query) {
  nlohmann::json merged = nlohmann::json::array();
  for (const auto& m : query.merged) {
    merged.push_back({{"text", m.text}, {"candidate_length", m.candidate_length}});
  }
  return {{"round_length", query.round_length},
          {"eta", query.eta.eta()},
          {"merged", std::move(merged)}};
}

QueryMessage query_from_json(const nlohmann::json& j) {
  QueryMessage q;
  q.round_length = j.at("round_length").get<int>();
  q.eta = NoiseFactor(j.at("eta").get<double>());
  for (const auto& m : j.at("merged")) {
    q.merged.push_back({m.at("text").get<std::string>(), m.at("candidate_length").get<int>()});
  }
  return q;
}

nlohmann::json to_json(const ResponseMessage& response) {
  return {{"client_id", response.client_id}, {"bits", response.bits}};
}

ResponseMessage response_from_json(const nlohmann::json& j) {
  ResponseMessage r;
  r.client_id = j.at("client_id").get<std::uint64_t>();
  r.bits = j.at("bits").get<std::vector<std::uint8_t>>();
  return r;
}

}  // namespace dpflmd
