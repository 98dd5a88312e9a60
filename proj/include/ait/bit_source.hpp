#pragma once

#include "ait/bits.hpp"
#include "ait/interval.hpp"
#include "ait/rational.hpp"

#include <cstdint>
#include <functional>
#include <memory>

namespace ait {

// An infinite binary sequence, read as the base-two expansion of a real in
// [0,1]. Digits follow the expansion with infinitely many zeros: a value
// with a terminating expansion never uses the trailing-ones form, and the
// value 1 reads as all zeros. prefix() results are cached, so prefix(n) is
// always an initial segment of prefix(n+1). Instances are single-owner:
// reads mutate only the internal cache/refinement state.
class BitSource {
 public:
  virtual ~BitSource() = default;

  // First n digits.
  const BitString& prefix(std::size_t n);
  // 1-based digit access: bit(n) is the last digit of prefix(n).
  int bit(std::size_t n);

 protected:
  // Grow cache_ to at least n digits (may overshoot).
  virtual void extend_to(std::size_t n) = 0;
  BitString cache_;

 private:
  BitString view_;  // prefix() return storage
};

// Expansion of an exact rational in [0,1]. Digits come from long division,
// which yields the infinitely-many-zeros form automatically.
class RationalSource final : public BitSource {
 public:
  explicit RationalSource(const Rational& value);

 private:
  void extend_to(std::size_t n) override;
  BigInt rem_;  // current remainder, value = (emitted digits) + rem_/den_ * 2^-k
  BigInt den_;
};

// head, then pattern repeated forever. pattern must be nonempty.
class PeriodicSource final : public BitSource {
 public:
  PeriodicSource(BitString head, BitString pattern);

 private:
  void extend_to(std::size_t n) override;
  BitString head_, pattern_;
};

// Digits produced by an arbitrary deterministic rule (0-based position).
class GeneratorSource final : public BitSource {
 public:
  explicit GeneratorSource(std::function<int(std::size_t)> bit_fn);

 private:
  void extend_to(std::size_t n) override;
  std::function<int(std::size_t)> bit_fn_;
};

// Digits of a real known only through a shrinking sequence of certified
// rational enclosures (stage 0, 1, 2, ...). A digit is emitted only once
// the current enclosure pins it down: floor(lo * 2^n) == floor(hi * 2^n).
// If the enclosure cannot certify a requested digit within max_stage
// refinements, prefix() throws UnstableDigits: an unknown digit is an
// error, never a guess.
class EnumerationSource final : public BitSource {
 public:
  using Refiner = std::function<RationalInterval(std::uint64_t stage)>;
  // refine(0) is taken as the initial enclosure; later stages are
  // intersected with the running enclosure, so refinements only ever
  // tighten. A refinement disjoint from the current enclosure throws.
  EnumerationSource(Refiner refine, std::uint64_t max_stage);

  std::uint64_t stage() const { return stage_; }
  const RationalInterval& enclosure() const { return current_; }

 private:
  void extend_to(std::size_t n) override;
  Refiner refine_;
  std::uint64_t stage_ = 0;
  std::uint64_t max_stage_;
  RationalInterval current_;
};

}  // namespace ait
