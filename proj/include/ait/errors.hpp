#pragma once

#include <stdexcept>
#include <string>

namespace ait {

// A pair of programs (or a loaded set) breaks the pairwise prefix-free requirement.
struct PrefixViolation : std::runtime_error {
  explicit PrefixViolation(const std::string& what) : std::runtime_error(what) {}
};

// A requested count of codewords cannot be placed at some length.
struct UnrealizableSpec : std::runtime_error {
  explicit UnrealizableSpec(const std::string& what) : std::runtime_error(what) {}
  std::size_t length = 0;
};

// An enumeration-backed source cannot certify the requested digits
// within its refinement budget.
struct UnstableDigits : std::runtime_error {
  explicit UnstableDigits(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ait
