// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Each criterion carries its own wall-clock budget, asserted here.

#include "ait/bit_source.hpp"
#include "ait/bits.hpp"
#include "ait/interval.hpp"
#include "ait/machine.hpp"
#include "ait/martingale.hpp"
#include "ait/partition.hpp"
#include "ait/predictor.hpp"
#include "ait/rational.hpp"
#include "support.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace ait;
using namespace ait::testsupport;

namespace {

namespace fs = std::filesystem;

#define NEED(cond, msg)                                  \
  do {                                                   \
    if (!(cond)) return std::optional<std::string>(msg); \
  } while (0)

using Criterion = std::function<std::optional<std::string>()>;

void run_criterion(int id, const char* label, long budget_ms, const Criterion& body,
                   int& failures) {
  auto t0 = std::chrono::steady_clock::now();
  std::optional<std::string> err;
  try {
    err = body();
  } catch (const std::exception& e) {
    err = std::string("unexpected exception: ") + e.what();
  }
  long ms = (long)std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  if (!err && ms > budget_ms) {
    err = "time budget exceeded: " + std::to_string(ms) + " ms > " + std::to_string(budget_ms) +
          " ms";
  }
  std::printf("[%s] %d %s (%ld ms, budget %ld ms)\n", err ? "FAIL" : "PASS", id, label, ms,
              budget_ms);
  if (err) {
    std::fprintf(stderr, "  criterion %d: %s\n", id, err->c_str());
    ++failures;
  }
}

// 1. Compiled betting strategies obey the fairness law, exhaustively.
std::optional<std::string> fairness_suite() {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    MartingaleTotal bet = compile_martingale_total(hash_predictor(seed));
    FairnessVerdict v = check_fairness(bet, 10);
    NEED(v.pass, "fairness failed for generated predictor seed " + std::to_string(seed));
  }
  return std::nullopt;
}

// 2. Capital is exactly 2^commitments on clean runs and exactly 0 from the
// first wrong commitment onward.
std::optional<std::string> capital_identity() {
  Rng rng(20260816);
  for (int i = 0; i < 100; ++i) {
    TotalPredictor f = hash_predictor(1000 + std::uint64_t(i));
    CleanRun run = misprediction_free_run(f, rng, 64);
    MartingaleTotal bet = compile_martingale_total(f);
    for (std::size_t n = 0; n <= 64; ++n) {
      NEED(bet.eval(run.x.first(n)) == Rational::pow2((long long)run.commits_before[n]),
           "clean-run capital mismatch at prefix " + std::to_string(n));
    }
  }
  for (std::uint64_t seed : {21u, 22u, 23u}) {
    TotalPredictor f = hash_predictor(seed);
    MartingaleTotal bet = compile_martingale_total(f);
    for (std::uint64_t idx = 0;; ++idx) {
      BitString x = BitString::from_index(idx);
      if (x.size() > 12) break;
      std::size_t commits = 0;
      bool dead = false;
      BitString p;
      for (std::size_t i = 0; i < x.size() && !dead; ++i) {
        Prediction v = f.eval(p);
        if (v != Prediction::Suspend) {
          if (((v == Prediction::One) ? 1 : 0) == x.bit(i)) {
            ++commits;
          } else {
            dead = true;
          }
        }
        p.push_back(x.bit(i));
      }
      Rational want = dead ? Rational(0) : Rational::pow2((long long)commits);
      NEED(bet.eval(x) == want, "post-misprediction capital wrong at index " +
                                    std::to_string(idx) + " seed " + std::to_string(seed));
    }
  }
  return std::nullopt;
}

// 3. The synthesized automaton says One exactly on y 0^L with |y| >= m, and
// never says Zero.
std::optional<std::string> synthesizer_characterization() {
  for (std::size_t m = 0; m <= 3; ++m) {
    for (std::size_t L = 1; L <= 3; ++L) {
      PredictorFAO fao = synth_runlength_fao(m, L);
      for (std::uint64_t idx = 0;; ++idx) {
        BitString x = BitString::from_index(idx);
        if (x.size() > 12) break;
        Prediction got = fao_run(fao, x);
        NEED(got != Prediction::Zero, "automaton emitted Zero, m=" + std::to_string(m) +
                                          " L=" + std::to_string(L));
        bool expect_one = x.size() >= m + L;
        for (std::size_t j = 0; expect_one && j < L; ++j) {
          if (x.bit(x.size() - 1 - j) != 0) expect_one = false;
        }
        NEED((got == Prediction::One) == expect_one,
             "verdict disagrees with the trailing-run predicate, m=" + std::to_string(m) +
                 " L=" + std::to_string(L) + " x=" + x.str());
      }
    }
  }
  return std::nullopt;
}

// 4. Sequences generated with certified run structure are predicted with no
// errors and at least the generator's own guaranteed count.
std::optional<std::string> structure_soundness() {
  Rng rng(777);
  const std::size_t horizon = 10000;
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t m = rng.below(4);
    std::size_t L = 1 + rng.below(3);
    StructuredRun run = structured_run(rng, m, L, horizon);
    auto src = buffer_source(run.x);
    PredictabilityReport rep = check_predictability(synth_runlength_fao(m, L), *src, horizon);
    NEED(rep.mispredictions.empty(), "misprediction on structured sequence, trial " +
                                         std::to_string(trial));
    NEED(rep.predictions_made >= run.guaranteed_predictions,
         "prediction count below the guaranteed floor, trial " + std::to_string(trial));
  }
  return std::nullopt;
}

// 5. At unit temperature the partial sum IS the revealed Kraft mass; sums
// are certified monotone in temperature and never exceed 1.
std::optional<std::string> partition_identities() {
  Rng rng(555);
  const std::vector<Rational> temps{Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
  for (int i = 0; i < 50; ++i) {
    PrefixMachine m = make_table_machine(random_table_pairs(rng));
    m.enumerate_fully();
    Rational kraft = m.kraft_sum();
    NEED(kraft <= Rational(1), "Kraft mass above 1, machine " + std::to_string(i));
    PartitionApprox z1 = z_approx(m, Rational(1), 32);
    NEED(z1.value.is_point(), "unit-temperature sum not exact, machine " + std::to_string(i));
    NEED(z1.value.lo == kraft, "unit-temperature sum differs from Kraft mass, machine " +
                                   std::to_string(i));
    std::vector<RationalInterval> zs;
    for (const Rational& t : temps) zs.push_back(z_approx(m, t, 96).value);
    for (std::size_t j = 0; j + 1 < zs.size(); ++j) {
      NEED(interval_leq(zs[j], zs[j + 1]) == Cert::Yes,
           "temperature monotonicity not certified, machine " + std::to_string(i));
      NEED(zs[j].hi <= Rational(1), "cold sum above 1, machine " + std::to_string(i));
    }
  }
  return std::nullopt;
}

// 6. The half-exponential density family stays under 0.83 at temperature 1
// yet passes 10 at temperature 2; both facts checked against closed-form
// partial sums evaluated with plain 64-bit counts.
std::optional<std::string> phase_transition_exhibit() {
  PrefixMachine m = build_synthetic_domain(synthetic_pow2_over_2n2(30));
  m.enumerate_fully();
  auto count = [](std::size_t n) {
    return (std::uint64_t(1) << n) / (2 * std::uint64_t(n) * std::uint64_t(n));
  };

  Rational cold_closed(0);
  for (std::size_t n = 1; n <= 30; ++n) {
    cold_closed += Rational(BigInt(count(n))) * Rational::pow2(-(long long)n);
  }
  PartitionApprox z1 = z_approx(m, Rational(1), 32);
  NEED(z1.value.is_point(), "unit-temperature sum not exact");
  NEED(z1.value.lo == cold_closed, "unit-temperature sum differs from the closed form");
  NEED(cold_closed <= Rational(83, 100), "cold sum above the 0.83 ceiling");

  // hot closed form: A + B*sqrt(2) with 181/128 <= sqrt(2) <= 182/128
  Rational a(0), b(0);
  for (std::size_t n = 1; n <= 30; ++n) {
    Rational c(BigInt(count(n)));
    if (n % 2 == 0) {
      a += c * Rational::pow2(-(long long)(n / 2));
    } else {
      b += c * Rational::pow2(-(long long)((n + 1) / 2));
    }
  }
  Rational hot_lo = a + b * Rational(181, 128);
  Rational hot_hi = a + b * Rational(182, 128);
  NEED(hot_lo > Rational(10), "hot closed form failed to pass 10");
  PartitionApprox z2 = z_approx(m, Rational(2), 16);
  NEED(z2.value.lo > Rational(10), "hot certified sum failed to pass 10");
  NEED(std::max(z2.value.lo, hot_lo) <= std::min(z2.value.hi, hot_hi),
       "hot enclosures of the two routes do not overlap");
  return std::nullopt;
}

// 7. Bounded shortest-program search equals a brute-force scan over every
// candidate program in canonical order.
std::optional<std::string> complexity_oracle_equivalence() {
  Rng rng(999);
  for (int i = 0; i < 50; ++i) {
    PrefixMachine m = make_table_machine(random_table_pairs(rng));
    m.enumerate_fully();
    std::map<BitString, BitString> defn;
    for (const auto& hp : m.enumerated_pairs()) defn.emplace(hp.program, hp.output);

    std::map<BitString, std::pair<std::size_t, BitString>> firsts;
    for (std::uint64_t idx = 0;; ++idx) {
      BitString p = BitString::from_index(idx);
      if (p.size() > 12) break;
      auto it = defn.find(p);
      if (it != defn.end()) firsts.emplace(it->second, std::make_pair(p.size(), p));
    }

    std::vector<BitString> targets;
    for (const auto& [prog, out] : defn) {
      (void)prog;
      targets.push_back(out);
    }
    targets.push_back(random_bitstring(rng, 5));
    targets.push_back(random_bitstring(rng, 3));

    for (const BitString& t : targets) {
      ComplexityReport rep = m.complexity_exact(t, 12, 1000);
      auto it = firsts.find(t);
      if (it == firsts.end()) {
        NEED(!rep.h_value.has_value(), "search found a program the scan did not, machine " +
                                           std::to_string(i));
      } else {
        NEED(rep.h_value.has_value(), "search missed a producible target, machine " +
                                          std::to_string(i));
        NEED(*rep.h_value == it->second.first, "shortest length differs from the scan, machine " +
                                                   std::to_string(i));
        NEED(rep.witness.has_value() && *rep.witness == it->second.second,
             "witness differs from the canonical-first program, machine " + std::to_string(i));
      }
    }
  }
  return std::nullopt;
}

// 8. Certified power enclosures: width within 2^-k, endpoints verified
// against the defining inequality in exact integer arithmetic.
std::optional<std::string> precision_contract() {
  Rng rng(4242);
  for (int i = 0; i < 500; ++i) {
    std::uint64_t len = 1 + rng.below(64);
    unsigned num = unsigned(1 + rng.below(16));
    unsigned den = unsigned(1 + rng.below(16));
    unsigned k = unsigned(1 + rng.below(64));
    RationalInterval e = pow2_neg(len, Rational(num, den), k);
    NEED(e.hi - e.lo <= Rational::pow2(-(long long)k),
         "enclosure wider than 2^-k, case " + std::to_string(i));
    NEED(e.lo.sign() >= 0, "negative lower end, case " + std::to_string(i));

    // value v = 2^(-len*den/num): lo <= v iff lo_num^num * 2^(len*den) <=
    // lo_den^num, and v <= hi iff hi_den^num <= hi_num^num * 2^(len*den)
    const unsigned shift = unsigned(len * den);
    BigInt lo_side = boost::multiprecision::pow(e.lo.num(), num) << shift;
    BigInt lo_bound = boost::multiprecision::pow(e.lo.den(), num);
    NEED(lo_side <= lo_bound, "lower end fails the exact root check, case " + std::to_string(i));
    BigInt hi_side = boost::multiprecision::pow(e.hi.num(), num) << shift;
    BigInt hi_bound = boost::multiprecision::pow(e.hi.den(), num);
    NEED(hi_bound <= hi_side, "upper end fails the exact root check, case " + std::to_string(i));
  }
  return std::nullopt;
}

// 9. The command-line tool is bit-for-bit reproducible.
std::optional<std::string> cli_determinism(const std::string& cli) {
  NEED(!cli.empty(), "path to the command-line binary was not supplied");
  NEED(fs::exists(cli), "command-line binary not found at " + cli);
  fs::path dir = fs::temp_directory_path() / "ait-acceptance";
  fs::create_directories(dir);

  auto write_file = [&](const char* name, const std::string& content) {
    fs::path p = dir / name;
    std::ofstream f(p);
    f << content;
    return p.string();
  };
  auto slurp = [](const fs::path& p) {
    std::ifstream f(p);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
  };

  std::string interp = write_file("det.machine", "kind=interpreter\nlabel=det\n");
  std::string table = write_file("det-table.machine",
                                 "kind=table\nlabel=dt\npair=0:\npair=10:1\n");
  const std::vector<std::string> commands{
      "machine-enum --machine \"" + interp + "\" --steps 50000",
      "phase-table --machine \"" + table +
          "\" --temps 1/3,1/2,1 --precision-bits 64 --decimal-places 6",
      "predict --sequence periodic:100 --estimate 60 --horizon 40",
  };
  for (std::size_t c = 0; c < commands.size(); ++c) {
    std::vector<int> codes;
    std::vector<std::string> outs, errs;
    for (int rep = 0; rep < 3; ++rep) {
      fs::path out = dir / ("out-" + std::to_string(c) + "-" + std::to_string(rep));
      fs::path err = dir / ("err-" + std::to_string(c) + "-" + std::to_string(rep));
      std::string cmd = "\"" + cli + "\" " + commands[c] + " > \"" + out.string() + "\" 2> \"" +
                        err.string() + "\"";
      codes.push_back(std::system(cmd.c_str()));
      outs.push_back(slurp(out));
      errs.push_back(slurp(err));
    }
    NEED(codes[0] == 0, "command " + std::to_string(c) + " did not exit cleanly");
    NEED(codes[0] == codes[1] && codes[1] == codes[2],
         "exit status varies across repeats, command " + std::to_string(c));
    NEED(!outs[0].empty(), "command " + std::to_string(c) + " produced no output");
    NEED(outs[0] == outs[1] && outs[1] == outs[2],
         "stdout varies across repeats, command " + std::to_string(c));
    NEED(errs[0] == errs[1] && errs[1] == errs[2],
         "stderr varies across repeats, command " + std::to_string(c));
  }
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  int failures = 0;
  run_criterion(1, "compiled bettors pass the exhaustive fairness audit", 10000, fairness_suite,
                failures);
  run_criterion(2, "capital identity on clean runs, zero after a wrong call", 10000,
                capital_identity, failures);
  run_criterion(3, "run-length automata match the trailing-run predicate", 30000,
                synthesizer_characterization, failures);
  run_criterion(4, "structured sequences meet their guaranteed prediction floor", 60000,
                structure_soundness, failures);
  run_criterion(5, "unit-temperature sums equal the Kraft mass, certified monotone", 10000,
                partition_identities, failures);
  run_criterion(6, "density family: under 0.83 cold, past 10 hot, vs closed forms", 30000,
                phase_transition_exhibit, failures);
  run_criterion(7, "bounded complexity search equals the brute-force scan", 30000,
                complexity_oracle_equivalence, failures);
  run_criterion(8, "certified enclosures: width bound and exact root checks", 10000,
                precision_contract, failures);
  run_criterion(9, "command-line runs are byte-identical across repeats", 60000,
                [&cli] { return cli_determinism(cli); }, failures);
  if (failures == 0) {
    std::printf("acceptance: 9/9 criteria passed\n");
  } else {
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
