// Experiment driver for federated differentially private motif mining.
//
//   dpflmd mine     one private mining run, prints the top-N motifs
//   dpflmd oracle   exact non-private ground truth
//   dpflmd eval     compare two NCFM json files
//   dpflmd sweep    parameter sweep with repetitions, writes csv + json
//   dpflmd gen-data synthetic dataset generator
//
// Options can also come from a flat key=value config file (--config);
// command-line flags override file values.

#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"

#include "dpflmd/experiment.hpp"
#include "dpflmd/metrics.hpp"
#include "dpflmd/oracle.hpp"

namespace {

struct CommonArgs {
  std::string dataset;
  std::string format = "plain";
  bool strip_ambiguous = false;
  dpflmd::MiningParams params;
  double x_value = 0.5;  // |D|/2 unless given
  std::string containment = "exact";
  bool debias = false;
  bool verbose = false;
};

void add_dataset_flags(CLI::App& cmd, CommonArgs& args) {
  cmd.add_option("--dataset", args.dataset, "input dataset file")->required();
  cmd.add_option("--format", args.format, "plain|fasta|uci-csv")->default_val("plain");
  cmd.add_flag("--strip-ambiguous", args.strip_ambiguous,
               "drop IUPAC ambiguity codes and gaps instead of failing");
}

void add_mining_flags(CLI::App& cmd, CommonArgs& args) {
  cmd.add_option("--f", args.params.f, "support threshold in (0,1]")->required();
  cmd.add_option("--delta", args.params.delta, "Hamming tolerance")->default_val(1);
  cmd.add_option("--lmin", args.params.l_min, "minimum motif length")->default_val(1);
  cmd.add_option("--lmax", args.params.l_max, "maximum motif length")->default_val(4);
  cmd.add_option("--topn", args.params.top_n, "motifs to report")->default_val(30);
  cmd.add_option("--epsilon", args.params.epsilon, "privacy budget per response")->default_val(3.0);
  cmd.add_option("--xi", args.params.xi, "filtering error threshold in (0,1]")->default_val(0.01);
  cmd.add_option("--x", args.x_value, "participants per round; values below 1 are a fraction of |D|")
      ->default_val(0.5);
  cmd.add_option("--seed", args.params.seed, "master RNG seed")->default_val(1);
  cmd.add_option("--containment", args.containment, "exact|first-occurrence")
      ->check(CLI::IsMember({"exact", "first-occurrence"}))
      ->default_val("exact");
  cmd.add_flag("--debias", args.debias, "store debiased instead of raw noisy frequencies");
  cmd.add_flag("--verbose", args.verbose, "per-round log on stderr");
}

dpflmd::Dataset load(const CommonArgs& args) {
  dpflmd::LoadOptions options;
  options.strip_ambiguous = args.strip_ambiguous;
  return dpflmd::load_dataset(args.dataset, dpflmd::parse_format(args.format), options);
}

dpflmd::MiningOptions mining_options(const CommonArgs& args) {
  dpflmd::MiningOptions options;
  options.containment = args.containment == "first-occurrence"
                            ? dpflmd::ContainmentMode::FirstOccurrence
                            : dpflmd::ContainmentMode::Exact;
  options.debias = args.debias;
  options.verbose = args.verbose;
  return options;
}

void print_ncfm(const std::vector<dpflmd::ScoredMotif>& ncfm) {
  std::printf("%-12s %12s %12s\n", "pattern", "frequency", "cf");
  for (const auto& m : ncfm) {
    std::printf("%-12s %12.6f %12.6f\n", m.pattern.c_str(), m.frequency, m.cf);
  }
  std::printf("%zu motifs\n", ncfm.size());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"federated differentially private DNA motif mining"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string out;

  auto* mine = app.add_subcommand("mine", "run the private federated miner once");
  mine->set_config("--config");
  add_dataset_flags(*mine, args);
  add_mining_flags(*mine, args);
  mine->add_option("--out", out, "write the NCFM as json");

  auto* oracle = app.add_subcommand("oracle", "exact non-private ground truth");
  oracle->set_config("--config");
  add_dataset_flags(*oracle, args);
  add_mining_flags(*oracle, args);
  oracle->add_option("--out", out, "write the NCFM as json");

  auto* eval = app.add_subcommand("eval", "precision/recall/F1 of one NCFM against another");
  std::string pred_path, truth_path;
  eval->add_option("--pred", pred_path, "predicted NCFM json")->required();
  eval->add_option("--truth", truth_path, "ground-truth NCFM json")->required();

  auto* sweep = app.add_subcommand("sweep", "sweep parameters with repetitions");
  sweep->set_config("--config");
  add_dataset_flags(*sweep, args);
  add_mining_flags(*sweep, args);
  std::size_t reps = 100;
  std::vector<double> sweep_f, sweep_eps, sweep_xi, sweep_x;
  sweep->add_option("--reps", reps, "repetitions per sweep point")->default_val(100);
  sweep->add_option("--sweep-f", sweep_f, "support thresholds to sweep");
  sweep->add_option("--sweep-epsilon", sweep_eps, "epsilon values to sweep");
  sweep->add_option("--sweep-xi", sweep_xi, "xi values to sweep");
  sweep->add_option("--sweep-x", sweep_x, "participant counts (or fractions) to sweep");
  sweep->add_option("--out", out, "output directory")->required();

  auto* gen = app.add_subcommand("gen-data", "generate a synthetic plain-format dataset");
  dpflmd::SyntheticSpec spec;
  std::string gen_alphabet = "ACGT";
  std::string gen_motif;
  gen->add_option("--n", spec.num_records, "number of records")->required();
  gen->add_option("--length", spec.record_length, "record length")->required();
  gen->add_option("--alphabet", gen_alphabet, "alphabet symbols")->default_val("ACGT");
  gen->add_option("--motif", gen_motif, "motif to plant");
  gen->add_option("--plant-rate", spec.plant_rate, "fraction of records receiving the motif")
      ->default_val(0.0);
  gen->add_option("--seed", spec.seed, "generator seed")->default_val(1);
  gen->add_option("--out", out, "output file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (mine->parsed()) {
      const auto dataset = load(args);
      args.params.x = dpflmd::resolve_participants(args.x_value, dataset.size());
      const auto result = dpflmd::run_mining(dataset, args.params, mining_options(args));
      print_ncfm(result.ncfm);
      std::printf("total budget spent: %g\n", result.ledger.total());
      if (!out.empty()) dpflmd::write_ncfm(result.ncfm, out);
    } else if (oracle->parsed()) {
      const auto dataset = load(args);
      args.params.x = 1;  // unused by the exact miner
      const auto truth = dpflmd::exact_mine(dataset, args.params);
      print_ncfm(truth.ncfm);
      if (!out.empty()) dpflmd::write_ncfm(truth.ncfm, out);
    } else if (eval->parsed()) {
      const auto pred = dpflmd::read_ncfm(pred_path);
      const auto truth = dpflmd::read_ncfm(truth_path);
      std::set<std::string> pred_set, truth_set;
      for (const auto& m : pred) pred_set.insert(m.pattern);
      for (const auto& m : truth) truth_set.insert(m.pattern);
      const auto counts = dpflmd::confusion(pred_set, truth_set);
      std::printf("tp=%zu fp=%zu fn=%zu\n", counts.tp, counts.fp, counts.fn);
      std::printf("precision=%.6f recall=%.6f f1=%.6f\n", dpflmd::precision(counts),
                  dpflmd::recall(counts), dpflmd::f1_score(counts));
    } else if (sweep->parsed()) {
      dpflmd::ExperimentConfig config;
      config.dataset_path = args.dataset;
      config.format = dpflmd::parse_format(args.format);
      config.load.strip_ambiguous = args.strip_ambiguous;
      config.base = args.params;
      config.x_value = args.x_value;
      config.repetitions = reps;
      config.sweep_f = sweep_f;
      config.sweep_epsilon = sweep_eps;
      config.sweep_xi = sweep_xi;
      config.sweep_x = sweep_x;
      config.out_dir = out;
      config.options = mining_options(args);
      return dpflmd::run_experiment(config);
    } else if (gen->parsed()) {
      spec.alphabet = dpflmd::Alphabet(gen_alphabet);
      if (!gen_motif.empty()) spec.planted_motif = gen_motif;
      const auto dataset = dpflmd::generate_synthetic(spec);
      dpflmd::write_dataset_plain(dataset, out);
      std::printf("wrote %zu records to %s\n", dataset.size(), out.c_str());
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
