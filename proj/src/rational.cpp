#include "ait/rational.hpp"

#include <stdexcept>
#include <utility>

namespace ait {

namespace {

BigInt parse_bigint(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("Rational: empty integer");
  std::size_t i = 0;
  bool neg = false;
  if (text[0] == '-') {
    neg = true;
    i = 1;
    if (text.size() == 1) throw std::invalid_argument("Rational: bare '-'");
  }
  BigInt v = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') throw std::invalid_argument("Rational: bad digit");
    v = v * 10 + (c - '0');
  }
  return neg ? BigInt(-v) : v;
}

}  // namespace

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_bigint(text));
  }
  return Rational(parse_bigint(text.substr(0, slash)),
                  parse_bigint(text.substr(slash + 1)));
}

Rational Rational::pow2(long long e) {
  BigInt p = BigInt(1) << (e < 0 ? -e : e);
  return e < 0 ? Rational(1, p) : Rational(p);
}

BigInt Rational::floor() const {
  if (num_ >= 0) return num_ / den_;
  // integer division truncates toward zero; adjust for negatives
  BigInt q = num_ / den_;
  if (q * den_ != num_) --q;
  return q;
}

Rational Rational::operator-() const {
  Rational r(*this);
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& r) {
  num_ = num_ * r.den_ + r.num_ * den_;
  den_ *= r.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& r) {
  num_ = num_ * r.den_ - r.num_ * den_;
  den_ *= r.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& r) {
  num_ *= r.num_;
  den_ *= r.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& r) {
  if (r.num_ == 0) throw std::invalid_argument("Rational: division by zero");
  num_ *= r.den_;
  den_ *= r.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // denominators are positive, so cross-multiplication preserves order
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::fraction_str() const {
  return num_.str() + "/" + den_.str();
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return fraction_str();
}

std::string Rational::decimal_truncated(unsigned places) const {
  if (num_ < 0) throw std::invalid_argument("decimal_truncated: negative value");
  BigInt ip = num_ / den_;
  std::string out = ip.str();
  if (places == 0) return out;
  out.push_back('.');
  BigInt rem = num_ - ip * den_;
  for (unsigned i = 0; i < places; ++i) {
    rem *= 10;
    BigInt d = rem / den_;
    out.push_back(char('0' + int(d)));
    rem -= d * den_;
  }
  return out;
}

}  // namespace ait
