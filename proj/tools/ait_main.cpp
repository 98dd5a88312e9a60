#include "CLI11.hpp"

#include "ait/cli.hpp"
#include "ait/rational.hpp"
#include "ait/specio.hpp"

#include <iostream>
#include <string>

// Command-line front end. All real work happens in ait::cli::run_command so
// tests can drive the same code paths without spawning a process.
int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for prefix machines, partition sums, "
               "betting strategies and finite-state prediction"};
  app.require_subcommand(1);

  ait::cli::RunConfig cfg;
  std::string temps_csv;
  std::string threshold_str;
  std::string tail_fraction_str;
  long long estimate_len = -1;
  int decimal_places = -1;

  auto add_machine = [&](CLI::App* c) {
    auto* a = c->add_option("--machine", cfg.machine_path,
                            "machine spec file (snapshots also accepted)");
    auto* b = c->add_option("--snapshot", cfg.machine_path,
                            "saved enumeration snapshot to resume from");
    a->excludes(b);
  };
  auto add_sequence = [&](CLI::App* c) {
    c->add_option("--sequence", cfg.sequence_spec,
                  "sequence spec (zeros | ones | rational:p/q | periodic:[head:]pattern | "
                  "partition:machine-file:T[:max-refine-stage])")
        ->required();
  };
  auto add_predictor_choice = [&](CLI::App* c) {
    c->add_option("--m", cfg.m, "run-length predictor: swallowed prefix length");
    c->add_option("--L", cfg.L, "run-length predictor: zero-run length that triggers a bet");
    c->add_option("--predictor", cfg.predictor_path, "finite-state predictor table file");
    c->add_option("--estimate", estimate_len,
                  "infer m,L from a sample prefix of this length, then audit the "
                  "positions that follow it");
    c->add_option("--tail-fraction", tail_fraction_str,
                  "fraction of the sample inspected for runs (default 1/2)");
    c->add_option("--horizon", cfg.horizon, "number of positions to audit");
  };

  auto* enm = app.add_subcommand("machine-enum", "enumerate halting programs");
  add_machine(enm);
  enm->add_option("--steps", cfg.steps, "enumeration stages to run");
  enm->add_option("--snapshot-out", cfg.snapshot_out, "write resulting state here");

  auto* pht = app.add_subcommand("phase-table", "certified partition-sum intervals");
  add_machine(pht);
  pht->add_option("--temps", temps_csv, "comma-separated list of rationals in (0,1]")
      ->required();
  pht->add_option("--steps", cfg.steps, "enumeration stages for interpreter machines");
  pht->add_option("--precision-bits", cfg.precision_bits,
                  "certified bits per partition-sum term");
  pht->add_option("--decimal-places", decimal_places,
                  "append truncated decimal columns with this many places");
  pht->add_option("--out", cfg.out_path, "CSV output path (default stdout)");

  auto* prd = app.add_subcommand("predict", "audit a predictor against a sequence");
  add_sequence(prd);
  add_predictor_choice(prd);
  prd->add_option("--out", cfg.out_path, "CSV report path");

  auto* mtg = app.add_subcommand("martingale", "bet along a sequence");
  add_sequence(mtg);
  add_predictor_choice(mtg);
  mtg->add_option("--threshold", threshold_str, "report first position where capital >= this");
  mtg->add_option("--out", cfg.out_path, "capital trace CSV path (default stdout)");

  auto* cpx = app.add_subcommand("complexity", "shortest-program search");
  add_machine(cpx);
  cpx->add_option("--target", cfg.target, "target output string (bits; empty for the empty string)");
  cpx->add_option("--cap", cfg.cap, "max program length considered");
  cpx->add_option("--budget", cfg.budget, "per-program step budget");

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (!temps_csv.empty()) cfg.temps = ait::parse_rational_list(temps_csv);
    if (!threshold_str.empty()) cfg.threshold = ait::Rational::parse(threshold_str);
    if (!tail_fraction_str.empty()) cfg.tail_fraction = ait::Rational::parse(tail_fraction_str);
    if (estimate_len >= 0) cfg.estimate = static_cast<std::size_t>(estimate_len);
    if (decimal_places >= 0) cfg.decimal_places = static_cast<std::size_t>(decimal_places);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  return ait::cli::run_command(cfg, std::cout, std::cerr);
}
