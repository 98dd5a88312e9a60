#include "ait/partition.hpp"

#include "ait/errors.hpp"

#include <ostream>
#include <stdexcept>

namespace ait {

namespace {

unsigned ceil_log2_u64(std::uint64_t n) {
  unsigned bits = 0;
  std::uint64_t v = n - 1;
  while (v != 0) {
    v >>= 1;
    ++bits;
  }
  return bits;
}

}  // namespace

PartitionApprox z_approx(const PrefixMachine& m, const Rational& temp, unsigned precision) {
  if (temp.sign() <= 0) throw std::invalid_argument("z_approx: temperature must be positive");
  if (precision == 0) throw std::invalid_argument("z_approx: precision must be >= 1");

  PartitionApprox out;
  out.machine_id = m.label();
  out.temp = temp;
  out.stage = m.stage();

  auto counts = m.enumerated_length_counts();
  std::uint64_t terms = 0;
  for (const auto& [len, count] : counts) {
    (void)len;
    terms += count;
  }
  out.terms = terms;
  if (terms == 0) {
    out.value = RationalInterval::point(Rational(0));
    return out;
  }

  const unsigned per_term = precision + ceil_log2_u64(terms) + 1;
  RationalInterval sum = RationalInterval::point(Rational(0));
  for (const auto& [len, count] : counts) {
    // the empty program contributes 2^0 = 1 exactly at every temperature
    RationalInterval term = (len == 0) ? RationalInterval::point(Rational(1))
                                       : pow2_neg(len, temp, per_term);
    sum = interval_add(sum, interval_scale(term, Rational(BigInt(count))));
  }
  // for T <= 1 each term is at most 2^-len, so the true value sits under
  // the Kraft bound 1 no matter how the per-term enclosures round up
  if (temp <= Rational(1) && Rational(1) < sum.hi) {
    sum = RationalInterval(sum.lo, Rational(1));
  }
  out.value = sum;
  return out;
}

SyntheticDomainSpec synthetic_pow2_over_2n2(std::size_t max_len) {
  SyntheticDomainSpec spec;
  spec.count_rule = [](std::size_t n) {
    return (BigInt(1) << n) / (2 * BigInt(n) * BigInt(n));
  };
  spec.max_len = max_len;
  spec.label = "synthetic:pow2_over_2n2:" + std::to_string(max_len);
  return spec;
}

PrefixMachine build_synthetic_domain(const SyntheticDomainSpec& spec) {
  if (!spec.count_rule) throw std::invalid_argument("build_synthetic_domain: null count rule");
  if (spec.max_len > 63) {
    throw std::invalid_argument("build_synthetic_domain: max_len above desk-scale bound 63");
  }
  std::vector<SynthRange> ranges;
  BigInt next_start = 0;  // lex-lowest free codeword value at the current length
  for (std::size_t n = 1; n <= spec.max_len; ++n) {
    BigInt want = spec.count_rule(n);
    if (want < 0) throw std::invalid_argument("build_synthetic_domain: negative count");
    BigInt capacity = (BigInt(1) << n) - next_start;
    if (want > capacity) {
      UnrealizableSpec err("unrealizable at length " + std::to_string(n) + ": requested " +
                           want.str() + ", free slots " + capacity.str());
      err.length = n;
      throw err;
    }
    if (want > 0) {
      SynthRange r;
      r.len = n;
      r.start = std::uint64_t(next_start);
      r.count = std::uint64_t(want);
      ranges.push_back(r);
    }
    next_start = (next_start + want) << 1;
  }
  std::string label = spec.label.empty() ? "synthetic" : spec.label;
  return PrefixMachine::make_synthetic(std::move(ranges), std::move(label));
}

std::vector<PartitionApprox> phase_table(const PrefixMachine& m,
                                         const std::vector<Rational>& temps,
                                         unsigned precision) {
  if (temps.empty()) throw std::invalid_argument("phase_table: empty temperature list");
  for (const auto& t : temps) {
    if (t.sign() <= 0) throw std::invalid_argument("phase_table: temperatures must be positive");
  }
  std::vector<PartitionApprox> rows;
  rows.reserve(temps.size());
  for (const auto& t : temps) rows.push_back(z_approx(m, t, precision));
  return rows;
}

void write_phase_csv(std::ostream& out, const std::vector<PartitionApprox>& rows,
                     std::optional<unsigned> decimal_places) {
  out << "T,stage,terms,lo,hi";
  if (decimal_places) {
    out << ",lo_decimal_truncated,hi_decimal_truncated";
  }
  out << "\n";
  for (const auto& r : rows) {
    out << r.temp.fraction_str() << "," << r.stage << "," << r.terms << ","
        << r.value.lo.fraction_str() << "," << r.value.hi.fraction_str();
    if (decimal_places) {
      out << "," << r.value.lo.decimal_truncated(*decimal_places) << ","
          << r.value.hi.decimal_truncated(*decimal_places);
    }
    out << "\n";
  }
}

}  // namespace ait
