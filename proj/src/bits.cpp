#include "ait/bits.hpp"

#include <stdexcept>

namespace ait {

BitString::BitString(std::string_view digits) {
  bits_.reserve(digits.size());
  for (char c : digits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("BitString: digit must be '0' or '1'");
    }
    bits_.push_back(c);
  }
}

BitString BitString::from_index(std::uint64_t index) {
  // Strings in length-then-lex order correspond to naturals via
  // index + 1 written in binary with the leading 1 dropped.
  std::uint64_t v = index + 1;
  std::string out;
  while (v > 1) {
    out.push_back(char('0' + (v & 1)));
    v >>= 1;
  }
  BitString r;
  r.bits_.assign(out.rbegin(), out.rend());
  return r;
}

BitString BitString::from_value(std::uint64_t value, std::size_t len) {
  if (len < 64 && (value >> len) != 0) {
    throw std::invalid_argument("BitString::from_value: value does not fit");
  }
  BitString r;
  r.bits_.resize(len);
  for (std::size_t i = 0; i < len; ++i) {
    r.bits_[len - 1 - i] = char('0' + ((value >> i) & 1));
  }
  return r;
}

void BitString::push_back(int b) {
  if (b != 0 && b != 1) throw std::invalid_argument("BitString: bit must be 0 or 1");
  bits_.push_back(char('0' + b));
}

void BitString::pop_back() {
  if (bits_.empty()) throw std::out_of_range("BitString::pop_back on empty string");
  bits_.pop_back();
}

BitString BitString::first(std::size_t n) const {
  if (n > bits_.size()) throw std::out_of_range("BitString::first: n exceeds size");
  BitString r;
  r.bits_ = bits_.substr(0, n);
  return r;
}

bool BitString::starts_with(const BitString& p) const {
  return bits_.size() >= p.bits_.size() &&
         bits_.compare(0, p.bits_.size(), p.bits_) == 0;
}

bool BitString::ends_with_zeros(std::size_t count) const {
  if (bits_.size() < count) return false;
  for (std::size_t i = bits_.size() - count; i < bits_.size(); ++i) {
    if (bits_[i] != '0') return false;
  }
  return true;
}

BitString BitString::operator+(const BitString& rhs) const {
  BitString r;
  r.bits_ = bits_ + rhs.bits_;
  return r;
}

BitString BitString::with(int b) const {
  BitString r(*this);
  r.push_back(b);
  return r;
}

std::uint64_t BitString::index() const {
  if (bits_.size() > 63) throw std::overflow_error("BitString::index: string longer than 63");
  std::uint64_t v = 1;
  for (char c : bits_) v = (v << 1) | std::uint64_t(c - '0');
  return v - 1;
}

std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
  if (a.bits_.size() != b.bits_.size()) {
    return a.bits_.size() <=> b.bits_.size();
  }
  int c = a.bits_.compare(b.bits_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

RunBlocks decompose_runs(const BitString& x) {
  RunBlocks rb;
  std::size_t i = 0;
  const std::size_t n = x.size();
  while (i < n && x.bit(i) == 1) ++i;
  rb.leading_ones = i;
  while (i < n) {
    // zero-block (nonempty by construction: x.bit(i) == 0 here)
    std::size_t zeros = 0;
    while (i < n && x.bit(i) == 0) {
      ++zeros;
      ++i;
    }
    std::size_t ones = 0;
    while (i < n && x.bit(i) == 1) {
      ++ones;
      ++i;
    }
    rb.blocks.emplace_back(zeros, ones);
    if (ones == 0) rb.open_zero_tail = true;
  }
  return rb;
}

BitString reconstruct_runs(const RunBlocks& rb) {
  BitString x;
  for (std::size_t i = 0; i < rb.leading_ones; ++i) x.push_back(1);
  for (const auto& [zeros, ones] : rb.blocks) {
    for (std::size_t i = 0; i < zeros; ++i) x.push_back(0);
    for (std::size_t i = 0; i < ones; ++i) x.push_back(1);
  }
  return x;
}

std::size_t max_zero_run(const BitString& x) {
  std::size_t best = 0, cur = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.bit(i) == 0) {
      ++cur;
      if (cur > best) best = cur;
    } else {
      cur = 0;
    }
  }
  return best;
}

}  // namespace ait
