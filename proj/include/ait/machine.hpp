#pragma once

#include "ait/bits.hpp"
#include "ait/rational.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ait {

struct HaltingPair {
  BitString program;
  BitString output;
  std::uint64_t discovered_stage = 0;

  friend bool operator==(const HaltingPair&, const HaltingPair&) = default;
};

enum class MachineKind { Table, Interpreter, Synthetic };

// Upper-bound certificate from a bounded search: the least program length
// <= search_cap producing the target within the step budget, or NOT-FOUND
// (an absent h_value is an answer, not an error).
struct ComplexityReport {
  BitString target;
  std::size_t search_cap = 0;
  std::uint64_t budget = 0;
  std::optional<std::size_t> h_value;
  std::optional<BitString> witness;  // lex-first among shortest
};

struct SynthRange {
  std::size_t len = 0;
  std::uint64_t start = 0;  // numeric value of the first codeword of this length
  std::uint64_t count = 0;
};

// Outcome of running the bundled stack interpreter on one program.
enum class SimStatus { Halted, Dead, OutOfBudget };
struct SimResult {
  SimStatus status = SimStatus::Dead;
  BitString output;
  std::uint64_t steps = 0;
};

// A self-delimiting machine with three interchangeable backends:
//   Table       finite explicit (program, output) list, checked prefix-free
//   Interpreter fixed stack-program semantics over self-delimiting inputs
//   Synthetic   a realized prefix-free codeword set (outputs all empty)
//
// Enumeration of the halting set is staged and deterministic: table and
// synthetic machines reveal one pair per step in length-then-lex order;
// the interpreter dovetails (program index, step budget) along diagonals.
// Mutation (step_enumeration) assumes single-owner access; all query
// methods are const.
class PrefixMachine {
 public:
  static PrefixMachine make_table(std::vector<std::pair<BitString, BitString>> pairs);
  static PrefixMachine make_interpreter();
  static PrefixMachine make_synthetic(std::vector<SynthRange> ranges, std::string label);

  MachineKind kind() const { return kind_; }
  std::uint64_t stage() const { return stage_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  // Advance the enumeration by `steps` dovetail/reveal steps.
  void step_enumeration(std::uint64_t steps);
  // Reveal everything (finite-domain kinds only; throws for interpreter).
  void enumerate_fully();
  bool fully_enumerated() const;

  std::uint64_t enumerated_count() const;
  // Program-length histogram of the enumerated set.
  std::map<std::size_t, std::uint64_t> enumerated_length_counts() const;
  // Sum of 2^-|p| over the enumerated set; never exceeds 1.
  Rational kraft_sum() const;

  // Materialized enumerated pairs in enumeration order. Refuses sets larger
  // than `limit` (synthetic realizations can be huge by design).
  std::vector<HaltingPair> enumerated_pairs(std::uint64_t limit = 1u << 20) const;
  void for_each_enumerated(const std::function<void(const HaltingPair&)>& fn,
                           std::uint64_t limit = 1u << 20) const;

  // Machine output on a program string, independent of enumeration stage
  // (decides halting directly; `budget` caps interpreter steps).
  std::optional<BitString> output_of(const BitString& program, std::uint64_t budget) const;

  // Bounded brute-force search for the shortest program producing target.
  // cap <= 24 (desk-scale exhaustion bound).
  ComplexityReport complexity_exact(const BitString& target, std::size_t cap,
                                    std::uint64_t budget) const;

  void save_snapshot(std::ostream& out) const;
  static PrefixMachine load_snapshot(std::istream& in);

  // Table definition (table kind only).
  const std::vector<std::pair<BitString, BitString>>& table_pairs() const;
  const std::vector<SynthRange>& synth_ranges() const;

 private:
  PrefixMachine() = default;
  void check_table_prefix_free() const;
  void dovetail_steps(std::uint64_t steps);

  MachineKind kind_ = MachineKind::Table;
  std::string label_;
  std::uint64_t stage_ = 0;

  // table: full definition, canonical order; enumerated = first stage_ entries
  std::vector<std::pair<BitString, BitString>> table_;

  // synthetic: per-length lex ranges, ascending length
  std::vector<SynthRange> ranges_;
  std::uint64_t synth_total_ = 0;

  // interpreter: discovery-ordered halting pairs plus membership set
  std::vector<HaltingPair> found_;
  std::set<BitString> found_set_;
  std::map<std::size_t, std::uint64_t> found_length_counts_;
};

PrefixMachine make_table_machine(std::vector<std::pair<BitString, BitString>> pairs);

// Direct interpreter semantics: run the 2-bit opcode payload
// (00 push0, 01 push1, 10 emit, 11 halt), one step per executed opcode.
SimResult run_interpreter_payload(const BitString& payload, std::uint64_t budget);
// Full program = 1^k 0 payload with |payload| == k; anything else never halts.
SimResult run_interpreter_program(const BitString& program, std::uint64_t budget);
// Decide every program with header size k <= k_max (possible because the
// opcode set has no loops: fate is settled within floor(k/2)+1 steps).
std::vector<std::pair<BitString, BitString>> interpreter_halting_upto(std::size_t k_max);

}  // namespace ait
