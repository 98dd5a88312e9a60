#pragma once

#include "ait/bit_source.hpp"
#include "ait/bits.hpp"
#include "ait/rational.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

namespace ait {

// Betting strategy as a capital function on finite strings. The fairness
// law B(x0) + B(x1) = 2 B(x) is a checkable property, not a constructor
// guarantee: arbitrary functions can be wrapped and then audited with
// check_fairness.
struct MartingaleTotal {
  std::function<Rational(const BitString&)> eval;
};

// Partial variant: eval may return nullopt (undefined). A well-formed
// partial martingale has a prefix-closed domain and defines B(x0) and
// B(x1) together or not at all; check_fairness audits both rules.
struct MartingalePartial {
  std::function<std::optional<Rational>(const BitString&)> eval;
};

struct FairnessVerdict {
  bool pass = false;
  // First offending node in length-then-lex order when pass is false.
  std::optional<BitString> witness;
};

// Exhaustively audits every node x with |x| < depth: nonnegativity of
// defined values, the fairness law, and (partial case) paired definedness
// of the two children plus prefix-closure of the domain. depth <= 16.
FairnessVerdict check_fairness(const MartingaleTotal& b, std::size_t depth);
FairnessVerdict check_fairness(const MartingalePartial& b, std::size_t depth);

// values[i] = B(first i digits of X) for i = 0..defined_up_to.
// defined_up_to < n only when a partial martingale goes undefined along X.
struct CapitalTrace {
  std::vector<Rational> values;
  std::size_t defined_up_to = 0;
};

CapitalTrace run_capital(const MartingaleTotal& b, BitSource& x, std::size_t n);
CapitalTrace run_capital(const MartingalePartial& b, BitSource& x, std::size_t n);

// Finite-horizon success observation: the least n <= horizon with
// B(X|n) >= threshold, if any. Evidence at a horizon, not a limit claim.
struct SuccessObservation {
  bool reached = false;
  std::size_t position = 0;  // meaningful only when reached
};

SuccessObservation succeeds_empirically(const MartingaleTotal& b, BitSource& x,
                                        const Rational& threshold, std::size_t horizon);
SuccessObservation succeeds_empirically(const MartingalePartial& b, BitSource& x,
                                        const Rational& threshold, std::size_t horizon);

// CSV with header "n,capital_num,capital_den" (exact values only).
void write_capital_csv(std::ostream& out, const CapitalTrace& trace);

}  // namespace ait
