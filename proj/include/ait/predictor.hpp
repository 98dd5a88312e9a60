#pragma once

#include "ait/bit_source.hpp"
#include "ait/bits.hpp"
#include "ait/martingale.hpp"
#include "ait/rational.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

namespace ait {

// A predictor's verdict on "what is the next digit after this prefix":
// commit to 0, commit to 1, or suspend (no bet).
enum class Prediction { Zero, One, Suspend };

char prediction_char(Prediction p);                 // '0' / '1' / 'N'
std::optional<Prediction> prediction_from_char(char c);

struct TotalPredictor {
  std::function<Prediction(const BitString&)> eval;
};

// May additionally be undefined on some prefixes (distinct from Suspend:
// undefined means the procedure never answers).
struct PartialPredictor {
  std::function<std::optional<Prediction>(const BitString&)> eval;
};

PartialPredictor as_partial(const TotalPredictor& f);

// Finite-state predictor: deterministic automaton whose state after
// reading x determines the verdict. Evaluable either from scratch
// (fao_run) or incrementally along a growing prefix.
struct PredictorFAO {
  std::size_t state_count = 0;
  std::size_t start = 0;
  std::vector<std::array<std::size_t, 2>> delta;  // delta[state][digit]
  std::vector<Prediction> verdict;                // per state

  void validate() const;  // throws std::invalid_argument on malformed tables
  TotalPredictor as_total() const;
};

Prediction fao_run(const PredictorFAO& m, const BitString& x);

// Scoreboard of one finite-horizon prediction audit: positions n with
// start <= n < start + horizon, verdict F(X|n) checked against digit n+1.
// predictions_made counts committed verdicts (right or wrong);
// mispredictions lists the n of every wrong commitment; suspensions
// counts Suspend verdicts. undefined_at is the first n where a partial
// predictor gave no answer (later positions are then unexamined, and
// predictions_made + suspensions counts only the examined ones).
// Finite-horizon evidence only; no limit claim.
struct PredictabilityReport {
  std::size_t horizon = 0;
  std::size_t start = 0;
  std::size_t predictions_made = 0;
  std::vector<std::size_t> mispredictions;
  std::size_t suspensions = 0;
  std::optional<std::size_t> undefined_at;
};

PredictabilityReport check_predictability(const PredictorFAO& m, BitSource& x,
                                          std::size_t horizon, std::size_t start = 0);
PredictabilityReport check_predictability(const TotalPredictor& f, BitSource& x,
                                          std::size_t horizon, std::size_t start = 0);
PredictabilityReport check_predictability(const PartialPredictor& f, BitSource& x,
                                          std::size_t horizon, std::size_t start = 0);

// Betting strategy induced by a predictor: capital starts at 1, rides
// unchanged through suspensions, doubles on every correct commitment and
// drops to 0 forever on a wrong one. Along a misprediction-free sequence
// the capital after n digits is exactly 2^(number of commitments among
// the first n positions).
MartingaleTotal compile_martingale_total(const TotalPredictor& f);
// Partial variant: the capital at x is defined iff the predictor answers
// on every proper prefix of x.
MartingalePartial compile_martingale_partial(const PartialPredictor& f);

// Automaton that waits out the first m digits, then commits to 1 exactly
// when the digits since then end in a run of L zeros (equivalently:
// verdict(x) == One iff x = y 0^L with |y| >= m). Never commits to 0.
// It never errs on any sequence whose zero-runs after position m all have
// length <= L. L >= 1.
PredictorFAO synth_runlength_fao(std::size_t m, std::size_t L);

struct RunLengthParams {
  std::size_t m = 0;
  std::size_t L = 0;
  friend bool operator==(const RunLengthParams&, const RunLengthParams&) = default;
};

// Heuristic parameter guess from a finite sample: L = longest complete
// zero-run ending in the trailing tail_fraction of x, m = index just past
// the last zero-run longer than that (0 if none). nullopt when the tail
// window contains no complete zero-run. A guess, not a certificate.
std::optional<RunLengthParams> estimate_runlength_params(const BitString& x,
                                                         const Rational& tail_fraction);

// Scans X|horizon for a zero-run of length d. When violated, position is
// the 1-based digit index at which the d-th consecutive zero appears;
// otherwise it is the horizon the scan cleared.
struct RunBoundVerdict {
  bool violated = false;
  std::size_t position = 0;
};
RunBoundVerdict check_run_bound(BitSource& x, std::size_t d, std::size_t horizon);

// Text table serialization for automata.
void write_fao(std::ostream& out, const PredictorFAO& m);
PredictorFAO read_fao(std::istream& in);

// Single-row CSV: "horizon,start,predictions_made,suspensions,
// misprediction_count,mispredictions,undefined_at" with the position list
// ';'-joined.
void write_report_csv(std::ostream& out, const PredictabilityReport& r);

}  // namespace ait
