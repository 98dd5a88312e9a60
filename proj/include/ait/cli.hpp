#pragma once

#include "ait/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ait::cli {

// One fully-resolved invocation. Commands: machine-enum, phase-table,
// predict, martingale, complexity. Identical configs produce byte-identical
// outputs: no clocks, no floats, no environment reads.
struct RunConfig {
  std::string command;

  std::string machine_path;   // machine spec or snapshot (sniffed)
  std::string snapshot_out;   // machine-enum: save state here afterwards
  std::string sequence_spec;
  std::string predictor_path;  // automaton table file

  std::vector<Rational> temps;
  std::uint64_t steps = 10000;
  std::size_t horizon = 100;
  unsigned precision_bits = 32;

  std::optional<std::size_t> m;
  std::optional<std::size_t> L;
  std::optional<std::size_t> estimate;  // sample length for parameter estimation
  Rational tail_fraction = Rational(1, 2);

  std::optional<Rational> threshold;
  std::optional<unsigned> decimal_places;

  std::string target;  // complexity target (binary digits, empty = empty string)
  std::size_t cap = 12;
  std::uint64_t budget = 10000;

  std::string out_path;  // CSV sink; empty = stdout
};

// Exit status: 0 done (predict: no mispredictions), 1 reported negative
// (mispredictions, or estimation found no usable zero-run), 2 validation
// or I/O failure. Summaries go to `out`; failures to `err`.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace ait::cli
