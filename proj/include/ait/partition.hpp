#pragma once

#include "ait/interval.hpp"
#include "ait/machine.hpp"
#include "ait/rational.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ait {

// Certified partial-sum enclosure of sum(2^(-|p|/T)) over the machine's
// currently enumerated halting programs.
struct PartitionApprox {
  std::string machine_id;
  Rational temp;
  std::uint64_t stage = 0;
  std::uint64_t terms = 0;
  RationalInterval value;
};

// Width contract: value.width() <= 2^-precision. Every per-term enclosure
// is computed at precision + ceil(log2(terms)) + 1 so the term widths sum
// under budget. When every |p|/T is an integer the result is an exact point.
PartitionApprox z_approx(const PrefixMachine& m, const Rational& temp, unsigned precision);

// Requested codeword counts per length, realized greedily in
// length-then-lex order.
struct SyntheticDomainSpec {
  std::function<BigInt(std::size_t)> count_rule;  // length -> requested count
  std::size_t max_len = 0;                        // lengths 1..max_len, <= 63
  std::string label;
};

// The canonical divergence-exhibit family: count(n) = floor(2^n / (2 n^2)).
SyntheticDomainSpec synthetic_pow2_over_2n2(std::size_t max_len);

// Realize the requested counts as an explicit prefix-free set. The free
// space at each length is a contiguous lex range, so allocation is
// first-fit from the lexicographic bottom; throws UnrealizableSpec naming
// the first length whose request does not fit.
PrefixMachine build_synthetic_domain(const SyntheticDomainSpec& spec);

// One z_approx per temperature against the same enumerated snapshot.
std::vector<PartitionApprox> phase_table(const PrefixMachine& m,
                                         const std::vector<Rational>& temps,
                                         unsigned precision);

// CSV with header "T,stage,terms,lo,hi"; rationals as num/den. With
// decimal_places set, appends lo/hi rendered as exact truncated decimals
// (columns marked "truncated" in the header).
void write_phase_csv(std::ostream& out, const std::vector<PartitionApprox>& rows,
                     std::optional<unsigned> decimal_places = std::nullopt);

}  // namespace ait
