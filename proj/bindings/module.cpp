#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "dpflmd/error.hpp"
#include "dpflmd/experiment.hpp"
#include "dpflmd/metrics.hpp"
#include "dpflmd/oracle.hpp"

namespace py = pybind11;
using namespace dpflmd;

namespace {

Dataset dataset_from_strings(const std::vector<std::string>& sequences,
                             const std::string& alphabet) {
  std::vector<SequenceRecord> records;
  records.reserve(sequences.size());
  for (std::size_t i = 0; i < sequences.size(); ++i) {
    records.push_back({i, sequences[i]});
  }
  return Dataset(std::move(records), Alphabet(alphabet));
}

MiningOptions make_options(const std::string& containment, bool debias, bool verbose) {
  MiningOptions options;
  options.containment = containment == "first-occurrence" ? ContainmentMode::FirstOccurrence
                                                          : ContainmentMode::Exact;
  options.debias = debias;
  options.verbose = verbose;
  return options;
}

}  // namespace

PYBIND11_MODULE(_dpflmd, m) {
  m.doc() = "federated differentially private DNA motif mining";

  py::register_exception<ProtocolError>(m, "ProtocolError");
  py::register_exception<LoadError>(m, "LoadError");

  py::class_<Alphabet>(m, "Alphabet")
      .def(py::init<std::string>())
      .def_static("dna", &Alphabet::dna, py::return_value_policy::reference)
      .def_property_readonly("symbols", &Alphabet::symbols)
      .def("__len__", &Alphabet::size)
      .def("contains", &Alphabet::contains);

  py::class_<Dataset>(m, "Dataset")
      .def(py::init(&dataset_from_strings), py::arg("sequences"), py::arg("alphabet") = "ACGT")
      .def("__len__", &Dataset::size)
      .def_property_readonly("sequences", [](const Dataset& d) {
        std::vector<std::string> out;
        for (const auto& r : d.records()) out.push_back(r.data);
        return out;
      });

  py::class_<MiningParams>(m, "MiningParams")
      .def(py::init([](double f, int delta, int l_min, int l_max, int top_n, double epsilon,
                       double xi, std::size_t x, std::uint64_t seed) {
             MiningParams p{f, delta, l_min, l_max, top_n, epsilon, xi, x, seed};
             p.validate();
             return p;
           }),
           py::arg("f"), py::arg("delta") = 1, py::arg("l_min") = 1, py::arg("l_max") = 4,
           py::arg("top_n") = 30, py::arg("epsilon") = 3.0, py::arg("xi") = 0.01,
           py::arg("x") = 1, py::arg("seed") = 1)
      .def_readwrite("f", &MiningParams::f)
      .def_readwrite("delta", &MiningParams::delta)
      .def_readwrite("l_min", &MiningParams::l_min)
      .def_readwrite("l_max", &MiningParams::l_max)
      .def_readwrite("top_n", &MiningParams::top_n)
      .def_readwrite("epsilon", &MiningParams::epsilon)
      .def_readwrite("xi", &MiningParams::xi)
      .def_readwrite("x", &MiningParams::x)
      .def_readwrite("seed", &MiningParams::seed);

  py::class_<ScoredMotif>(m, "ScoredMotif")
      .def_readonly("pattern", &ScoredMotif::pattern)
      .def_readonly("frequency", &ScoredMotif::frequency)
      .def_readonly("cf", &ScoredMotif::cf)
      .def("__repr__", [](const ScoredMotif& s) {
        return "ScoredMotif('" + s.pattern + "', frequency=" + std::to_string(s.frequency) +
               ", cf=" + std::to_string(s.cf) + ")";
      });

  py::class_<Rng>(m, "Rng").def(py::init<std::uint64_t>());

  py::class_<NoiseFactor>(m, "NoiseFactor")
      .def(py::init<double>())
      .def_property_readonly("eta", &NoiseFactor::eta);

  m.def("noise_factor", &noise_factor, py::arg("epsilon"));
  m.def("randomize_bit", &randomize_bit, py::arg("v"), py::arg("eta"), py::arg("rng"));
  m.def("debias_frequency", &debias_frequency, py::arg("observed_mean"), py::arg("eta"));
  m.def(
      "corrected_threshold",
      [](double f, double eta, double xi, std::size_t x) {
        return corrected_threshold(f, NoiseFactor(eta), xi, x).theta;
      },
      py::arg("f"), py::arg("eta"), py::arg("xi"), py::arg("x"));

  m.def("hamming", &hamming, py::arg("s"), py::arg("p"));
  m.def("is_approximate", &is_approximate, py::arg("s"), py::arg("p"), py::arg("delta"));
  m.def("brute_force_cf", &brute_force_cf, py::arg("supports"), py::arg("delta"));

  m.def(
      "split_merged",
      [](const std::string& text, int candidate_length) {
        return split_merged({text, candidate_length});
      },
      py::arg("text"), py::arg("candidate_length"));
  m.def(
      "generate_candidates",
      [](const std::vector<std::string>& frequent_prev, int l_min, int l,
         const std::string& alphabet) {
        const auto set = generate_candidates(frequent_prev, l_min, l, Alphabet(alphabet));
        std::vector<std::string> merged;
        for (const auto& ms : set.merged) merged.push_back(ms.text);
        return py::make_tuple(set.candidates, merged);
      },
      py::arg("frequent_prev"), py::arg("l_min"), py::arg("l"), py::arg("alphabet") = "ACGT");

  m.def("support", &support, py::arg("pattern"), py::arg("dataset"));

  m.def(
      "run_mining",
      [](const Dataset& dataset, const MiningParams& params, const std::string& containment,
         bool debias, bool verbose) {
        const auto result = run_mining(dataset, params, make_options(containment, debias, verbose));
        return py::make_tuple(result.ncfm, result.ledger.total());
      },
      py::arg("dataset"), py::arg("params"), py::arg("containment") = "exact",
      py::arg("debias") = false, py::arg("verbose") = false,
      "Run the federated miner; returns (ncfm, total_budget).");

  m.def(
      "exact_mine",
      [](const Dataset& dataset, const MiningParams& params) {
        return exact_mine(dataset, params).ncfm;
      },
      py::arg("dataset"), py::arg("params"), "Exact non-private NCFM.");

  m.def(
      "generate_synthetic",
      [](std::size_t num_records, std::size_t record_length, const std::string& alphabet,
         const std::optional<std::string>& motif, double plant_rate, std::uint64_t seed) {
        SyntheticSpec spec{num_records, record_length, Alphabet(alphabet), motif, plant_rate, seed};
        return generate_synthetic(spec);
      },
      py::arg("num_records"), py::arg("record_length"), py::arg("alphabet") = "ACGT",
      py::arg("motif") = std::nullopt, py::arg("plant_rate") = 0.0, py::arg("seed") = 1);

  m.def(
      "load_dataset",
      [](const std::filesystem::path& path, const std::string& format, bool strip_ambiguous) {
        LoadOptions options;
        options.strip_ambiguous = strip_ambiguous;
        return load_dataset(path, parse_format(format), options);
      },
      py::arg("path"), py::arg("format") = "plain", py::arg("strip_ambiguous") = false);

  m.def(
      "f1_score",
      [](const std::set<std::string>& predicted, const std::set<std::string>& truth) {
        return f1_score(confusion(predicted, truth));
      },
      py::arg("predicted"), py::arg("truth"));

  m.attr("__version__") = "0.1.0";
}
