#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ait {

// Finite binary string. The empty string is a valid value everywhere.
// Ordering is length-first, then lexicographic, which agrees with the
// usual identification of strings with naturals (empty=0, "0"=1, "1"=2,
// "00"=3, ...).
class BitString {
 public:
  BitString() = default;
  // Accepts only '0'/'1' characters.
  explicit BitString(std::string_view digits);

  // Inverse of index().
  static BitString from_index(std::uint64_t index);
  // The number `value` written as `len` binary digits, most significant first.
  // Requires value < 2^len.
  static BitString from_value(std::uint64_t value, std::size_t len);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  // 0-based access; returns 0 or 1.
  int bit(std::size_t i) const { return bits_[i] - '0'; }

  void push_back(int b);
  void pop_back();
  void clear() { bits_.clear(); }

  // First n digits; requires n <= size().
  BitString first(std::size_t n) const;
  bool starts_with(const BitString& p) const;
  // True when size() >= count and the last `count` digits are all 0.
  bool ends_with_zeros(std::size_t count) const;

  BitString operator+(const BitString& rhs) const;
  // Copy with one digit appended.
  BitString with(int b) const;

  // Position in length-then-lex order. Requires size() <= 63.
  std::uint64_t index() const;

  const std::string& str() const { return bits_; }

  friend bool operator==(const BitString&, const BitString&) = default;
  friend std::strong_ordering operator<=>(const BitString& a, const BitString& b);

 private:
  std::string bits_;  // '0'/'1' characters
};

// Run-block view of a string: leading_ones 1s, then alternating blocks
// 0^a 1^b. Every zero-block length is >= 1. The final one-block length may
// be 0, in which case open_zero_tail is set: the string ends inside a
// zero-block whose full extent is not yet known.
struct RunBlocks {
  std::size_t leading_ones = 0;
  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // (zeros, ones)
  bool open_zero_tail = false;
};

RunBlocks decompose_runs(const BitString& x);
// Inverse of decompose_runs.
BitString reconstruct_runs(const RunBlocks& rb);
// Length of the longest zero-run (0 for strings without zeros).
std::size_t max_zero_run(const BitString& x);

}  // namespace ait
