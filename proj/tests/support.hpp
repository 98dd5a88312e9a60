#pragma once

#include "ait/bit_source.hpp"
#include "ait/bits.hpp"
#include "ait/machine.hpp"
#include "ait/predictor.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace ait::testsupport {

// splitmix64: tiny, stateful, and identical on every platform. The std
// distributions are not portable across standard libraries, so all test
// randomness goes through this.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  int bit() { return int(next() & 1); }
};

inline BitString random_bitstring(Rng& rng, std::size_t len) {
  BitString x;
  for (std::size_t i = 0; i < len; ++i) x.push_back(rng.bit());
  return x;
}

// O(n^2) pairwise prefix-freeness check. Deliberately naive: it is the
// oracle the trie-based construction check is audited against.
inline bool pairwise_prefix_free(const std::vector<std::pair<BitString, BitString>>& pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (i == j) continue;
      if (pairs[j].first.starts_with(pairs[i].first)) return false;
    }
  }
  return true;
}

// Random prefix-free program set built by splitting leaves of a binary
// tree, then dropping a few leaves. Outputs are short random strings and
// may repeat across programs.
inline std::vector<std::pair<BitString, BitString>> random_table_pairs(
    Rng& rng, std::size_t max_entries = 20, std::size_t max_depth = 12) {
  std::vector<BitString> leaves{BitString()};
  std::size_t splits = rng.below(max_entries);
  for (std::size_t s = 0; s < splits; ++s) {
    std::size_t at = rng.below(leaves.size());
    if (leaves[at].size() >= max_depth) continue;
    BitString leaf = leaves[at];
    leaves[at] = leaf.with(0);
    leaves.push_back(leaf.with(1));
  }
  std::vector<std::pair<BitString, BitString>> pairs;
  for (const auto& leaf : leaves) {
    if (leaves.size() > 1 && rng.below(4) == 0) continue;  // drop
    pairs.emplace_back(leaf, random_bitstring(rng, rng.below(5)));
  }
  return pairs;
}

// Deterministic pseudo-random total predictor keyed by a seed. fnv-style
// hash of the prefix decides among Suspend / Zero / One.
inline TotalPredictor hash_predictor(std::uint64_t seed) {
  return TotalPredictor{[seed](const BitString& x) {
    std::uint64_t h = 1469598103934665603ull ^ seed;
    for (char c : x.str()) h = (h ^ std::uint64_t(c)) * 1099511628211ull;
    h ^= h >> 33;
    switch (h % 3) {
      case 0: return Prediction::Suspend;
      case 1: return Prediction::Zero;
      default: return Prediction::One;
    }
  }};
}

// Wrap a fixed buffer as a BitSource; positions past the buffer read 1
// (tests never look there, and a loud value beats a silent 0).
inline std::unique_ptr<BitSource> buffer_source(BitString buf) {
  return std::make_unique<GeneratorSource>([buf = std::move(buf)](std::size_t i) {
    return i < buf.size() ? buf.bit(i) : 1;
  });
}

// A sequence the given predictor never mispredicts: every committed bit is
// made true, suspended positions are filled randomly. commits_before[i] =
// number of commitments among positions 0..i-1, so the compiled capital
// at prefix length i must be exactly 2^commits_before[i].
struct CleanRun {
  BitString x;
  std::vector<std::size_t> commits_before;  // size len+1
  std::vector<std::size_t> committed_positions;
};

inline CleanRun misprediction_free_run(const TotalPredictor& f, Rng& rng, std::size_t len) {
  CleanRun run;
  run.commits_before.push_back(0);
  for (std::size_t n = 0; n < len; ++n) {
    Prediction v = f.eval(run.x);
    std::size_t commits = run.commits_before.back();
    int next;
    if (v == Prediction::Suspend) {
      next = rng.bit();
    } else {
      next = (v == Prediction::One) ? 1 : 0;
      ++commits;
      run.committed_positions.push_back(n);
    }
    run.x.push_back(next);
    run.commits_before.push_back(commits);
  }
  return run;
}

// Sequence with certified run structure: after `m` arbitrary digits, every
// zero-run has length <= L, and runs of exactly L (each followed by a 1)
// recur throughout. guaranteed_predictions counts the positions n < horizon
// at which a trusting run-length automaton synthesized from (m, L) is
// certain to commit correctly: the end of every exact-L run after the
// prefix, with its following 1 still inside the horizon.
struct StructuredRun {
  BitString x;
  std::size_t guaranteed_predictions = 0;
};

inline StructuredRun structured_run(Rng& rng, std::size_t m, std::size_t L,
                                    std::size_t horizon) {
  StructuredRun out;
  for (std::size_t i = 0; i < m; ++i) out.x.push_back(rng.bit());
  while (out.x.size() < horizon + 2) {
    // zero-block: exactly L half the time, shorter otherwise
    std::size_t a = (L == 1 || rng.bit()) ? L : 1 + rng.below(L);
    for (std::size_t i = 0; i < a; ++i) out.x.push_back(0);
    std::size_t run_end = out.x.size();  // prefix length with trailing 0^a
    std::size_t b = 1 + rng.below(3);
    for (std::size_t i = 0; i < b; ++i) out.x.push_back(1);
    if (a == L && run_end <= horizon - 1) ++out.guaranteed_predictions;
  }
  return out;
}

}  // namespace ait::testsupport
