#include "ait/interval.hpp"

#include <stdexcept>

namespace ait {

RationalInterval::RationalInterval(Rational l, Rational h)
    : lo(std::move(l)), hi(std::move(h)) {
  if (hi < lo) throw std::invalid_argument("RationalInterval: hi < lo");
}

RationalInterval RationalInterval::point(Rational v) {
  RationalInterval r;
  r.lo = v;
  r.hi = std::move(v);
  return r;
}

RationalInterval interval_add(const RationalInterval& a, const RationalInterval& b) {
  return RationalInterval(a.lo + b.lo, a.hi + b.hi);
}

RationalInterval interval_scale(const RationalInterval& a, const Rational& factor) {
  if (factor.sign() < 0) throw std::invalid_argument("interval_scale: negative factor");
  return RationalInterval(a.lo * factor, a.hi * factor);
}

Cert interval_leq(const RationalInterval& a, const RationalInterval& b) {
  if (a.hi <= b.lo) return Cert::Yes;
  if (a.lo > b.hi) return Cert::No;
  return Cert::Unknown;
}

RationalInterval pow2_neg(std::uint64_t len, const Rational& temp, unsigned precision) {
  if (len == 0) throw std::invalid_argument("pow2_neg: len must be >= 1");
  if (temp.sign() <= 0) throw std::invalid_argument("pow2_neg: temp must be positive");
  if (precision == 0) throw std::invalid_argument("pow2_neg: precision must be >= 1");

  // value = 2^(-len*d/n) for temp = n/d in lowest terms
  const BigInt e = BigInt(len) * temp.den();
  const BigInt& n = temp.num();
  static const BigInt kMaxShift = 1 << 22;  // keeps intermediate sizes sane
  if (e > kMaxShift || BigInt(precision) * n > kMaxShift) {
    throw std::invalid_argument("pow2_neg: exponent out of supported range");
  }
  if (e % n == 0) {
    BigInt exp = e / n;  // positive
    return RationalInterval::point(Rational(BigInt(1), BigInt(1) << unsigned(exp)));
  }

  // Bisect [0,1]. After step j the enclosure is [a, a+1] / 2^j; the value is
  // irrational here, so "candidate <= value" is never an equality and the
  // invariant a/2^j < value < (a+1)/2^j holds throughout.
  BigInt a = 0;
  BigInt pow2_e = BigInt(1) << unsigned(e);
  for (unsigned j = 1; j <= precision; ++j) {
    BigInt cand = (a << 1) | 1;
    // cand/2^j <= 2^(-e/n)  <=>  cand^n * 2^e <= 2^(j*n)
    BigInt lhs = boost::multiprecision::pow(cand, unsigned(n)) * pow2_e;
    BigInt rhs = BigInt(1) << unsigned(BigInt(j) * n);
    a = (lhs <= rhs) ? cand : (a << 1);
  }
  BigInt scale = BigInt(1) << precision;
  return RationalInterval(Rational(a, scale), Rational(a + 1, scale));
}

}  // namespace ait
