#include "ait/bit_source.hpp"

#include "ait/errors.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace ait {

const BitString& BitSource::prefix(std::size_t n) {
  if (cache_.size() < n) {
    extend_to(n);
    if (cache_.size() < n) throw std::logic_error("BitSource: extend_to fell short");
  }
  if (view_.size() != n) view_ = cache_.first(n);
  return view_;
}

int BitSource::bit(std::size_t n) {
  if (n == 0) throw std::invalid_argument("BitSource::bit: positions are 1-based");
  if (cache_.size() < n) prefix(n);
  return cache_.bit(n - 1);
}

RationalSource::RationalSource(const Rational& value) {
  if (value.sign() < 0 || value > Rational(1)) {
    throw std::invalid_argument("RationalSource: value must lie in [0,1]");
  }
  den_ = value.den();
  // value 1 expands as all zeros (fractional-part convention)
  rem_ = (value == Rational(1)) ? BigInt(0) : value.num();
}

void RationalSource::extend_to(std::size_t n) {
  while (cache_.size() < n) {
    rem_ <<= 1;
    if (rem_ >= den_) {
      cache_.push_back(1);
      rem_ -= den_;
    } else {
      cache_.push_back(0);
    }
  }
}

PeriodicSource::PeriodicSource(BitString head, BitString pattern)
    : head_(std::move(head)), pattern_(std::move(pattern)) {
  if (pattern_.empty()) throw std::invalid_argument("PeriodicSource: empty pattern");
}

void PeriodicSource::extend_to(std::size_t n) {
  while (cache_.size() < n) {
    std::size_t i = cache_.size();
    if (i < head_.size()) {
      cache_.push_back(head_.bit(i));
    } else {
      cache_.push_back(pattern_.bit((i - head_.size()) % pattern_.size()));
    }
  }
}

GeneratorSource::GeneratorSource(std::function<int(std::size_t)> bit_fn)
    : bit_fn_(std::move(bit_fn)) {
  if (!bit_fn_) throw std::invalid_argument("GeneratorSource: null rule");
}

void GeneratorSource::extend_to(std::size_t n) {
  while (cache_.size() < n) {
    int b = bit_fn_(cache_.size());
    if (b != 0 && b != 1) throw std::logic_error("GeneratorSource: rule produced non-bit");
    cache_.push_back(b);
  }
}

EnumerationSource::EnumerationSource(Refiner refine, std::uint64_t max_stage)
    : refine_(std::move(refine)), max_stage_(max_stage) {
  if (!refine_) throw std::invalid_argument("EnumerationSource: null refiner");
  current_ = refine_(0);
  if (current_.lo.sign() < 0 || current_.hi > Rational(1)) {
    throw std::invalid_argument("EnumerationSource: enclosure must lie in [0,1]");
  }
}

void EnumerationSource::extend_to(std::size_t n) {
  while (cache_.size() < n) {
    // try to certify all digits up to n at the current enclosure; digit n
    // certified implies every earlier digit is too
    BigInt flo = (current_.lo.num() << n) / current_.lo.den();
    BigInt fhi = (current_.hi.num() << n) / current_.hi.den();
    if (flo == fhi || (current_.is_point())) {
      BigInt window = flo;
      // low n bits of window, most significant first; the value 1 gives
      // window = 2^n whose low n bits are all zero, as required
      for (std::size_t i = cache_.size(); i < n; ++i) {
        cache_.push_back(int((window >> (n - 1 - i)) & 1));
      }
      return;
    }
    if (stage_ >= max_stage_) {
      throw UnstableDigits("EnumerationSource: digit " + std::to_string(cache_.size() + 1) +
                           " not certified within " + std::to_string(max_stage_) +
                           " refinement stages");
    }
    ++stage_;
    RationalInterval next = refine_(stage_);
    // keep the running intersection; an empty intersection means the
    // refiner contradicted itself and the interval constructor throws
    current_ = RationalInterval(next.lo < current_.lo ? current_.lo : next.lo,
                                next.hi > current_.hi ? current_.hi : next.hi);
  }
}

}  // namespace ait
