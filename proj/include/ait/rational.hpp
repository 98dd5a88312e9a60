#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ait {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational. Always stored in lowest terms with positive denominator;
// there is no overflow regime and no floating-point path anywhere.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt num, BigInt den);

  // Accepts "p/q", "p", optional leading '-'.
  static Rational parse(std::string_view text);
  // 2^e for any integer e (negative exponents give 1/2^-e).
  static Rational pow2(long long e);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  BigInt floor() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& r);
  Rational& operator-=(const Rational& r);
  Rational& operator*=(const Rational& r);
  Rational& operator/=(const Rational& r);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // Always "num/den", e.g. "0/1", "3/4", "-7/2".
  std::string fraction_str() const;
  // "num/den" but plain "num" for integers.
  std::string str() const;
  // Exact decimal digits, truncated toward zero to `places` fractional
  // digits. Nonnegative values only.
  std::string decimal_truncated(unsigned places) const;

 private:
  void normalize();
  BigInt num_, den_;
};

}  // namespace ait
