#pragma once

#include "ait/rational.hpp"

namespace ait {

// Closed interval [lo, hi] with exact rational endpoints. Used as a
// certificate: the intended real value is guaranteed to lie inside.
struct RationalInterval {
  Rational lo, hi;

  RationalInterval() = default;
  RationalInterval(Rational l, Rational h);
  static RationalInterval point(Rational v);

  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
};

// Three-valued certified comparison.
enum class Cert { Yes, No, Unknown };

RationalInterval interval_add(const RationalInterval& a, const RationalInterval& b);
// Scale by a nonnegative exact factor.
RationalInterval interval_scale(const RationalInterval& a, const Rational& factor);

// Is every value of a <= every value of b? Yes when a.hi <= b.lo,
// No when a.lo > b.hi, Unknown when the intervals overlap.
Cert interval_leq(const RationalInterval& a, const RationalInterval& b);

// Certified enclosure of 2^(-len/temp) with width <= 2^-precision.
// temp must be positive; len >= 1. When len/temp is an integer the result
// is an exact point. Otherwise the enclosure comes from dyadic bisection:
// with temp = n/d in lowest terms the value is the n-th root of 2^(-len*d),
// and each bisection step decides "mid <= value" by the exact integer
// comparison mid_num^n * 2^(len*d) <= 2^(scale*n).
RationalInterval pow2_neg(std::uint64_t len, const Rational& temp, unsigned precision);

}  // namespace ait
