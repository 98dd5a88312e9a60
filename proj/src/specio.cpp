#include "ait/specio.hpp"

#include "ait/errors.hpp"
#include "ait/interval.hpp"
#include "ait/partition.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ait {

namespace {

std::vector<std::pair<std::string, std::string>> read_kv_lines(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("machine spec: expected key=value, got \"" + line + "\"");
    }
    out.emplace_back(line.substr(0, eq), line.substr(eq + 1));
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t at = 0;
  while (true) {
    auto next = s.find(sep, at);
    if (next == std::string::npos) {
      out.push_back(s.substr(at));
      return out;
    }
    out.push_back(s.substr(at, next - at));
    at = next + 1;
  }
}

// Certified enclosure source for a machine's partition value. Finite-domain
// machines refine by root-extraction precision; the interpreter refines by
// deciding ever larger header sizes, with the undiscovered tail above
// header size K bounded by 2^-(K+1) (valid for T <= 1 only).
std::unique_ptr<BitSource> make_partition_source(const std::string& machine_path,
                                                 const Rational& temp,
                                                 std::uint64_t max_stage) {
  if (temp.sign() <= 0) {
    throw std::invalid_argument("partition source: temperature must be positive");
  }
  PrefixMachine loaded = load_machine_file(machine_path);

  if (loaded.kind() != MachineKind::Interpreter) {
    auto m = std::make_shared<PrefixMachine>(std::move(loaded));
    m->enumerate_fully();
    auto refine = [m, temp](std::uint64_t stage) {
      return z_approx(*m, temp, unsigned(8 + stage)).value;
    };
    return std::make_unique<EnumerationSource>(refine, max_stage);
  }

  if (temp > Rational(1)) {
    throw std::invalid_argument(
        "partition source: no certified tail bound above temperature 1 for the interpreter");
  }
  auto refine = [temp](std::uint64_t stage) {
    const std::size_t header_max = std::size_t(4 + stage);
    auto pairs = interpreter_halting_upto(header_max);
    std::map<std::size_t, std::uint64_t> counts;
    for (const auto& [p, o] : pairs) {
      (void)o;
      ++counts[p.size()];
    }
    unsigned per_term = unsigned(header_max + 12);
    RationalInterval sum = RationalInterval::point(Rational(0));
    for (const auto& [len, count] : counts) {
      sum = interval_add(sum,
                         interval_scale(pow2_neg(len, temp, per_term), Rational(BigInt(count))));
    }
    // everything not yet decided has header size > header_max
    Rational tail = Rational::pow2(-(long long)(header_max + 1));
    return RationalInterval(sum.lo, sum.hi + tail);
  };
  // each stage doubles the decision work; keep the exponent sane
  return std::make_unique<EnumerationSource>(refine, std::min<std::uint64_t>(max_stage, 18));
}

}  // namespace

PrefixMachine read_machine_spec(std::istream& in, const std::string& fallback_label) {
  auto kvs = read_kv_lines(in);
  std::string kind;
  std::string label = fallback_label;
  for (const auto& [k, v] : kvs) {
    if (k == "kind") kind = v;
    if (k == "label") label = v;
  }
  if (kind.empty()) throw std::runtime_error("machine spec: missing kind=");

  if (kind == "table") {
    std::vector<std::pair<BitString, BitString>> pairs;
    for (const auto& [k, v] : kvs) {
      if (k == "kind" || k == "label") continue;
      if (k != "pair") throw std::runtime_error("machine spec: unexpected key " + k);
      auto colon = v.find(':');
      if (colon == std::string::npos) {
        throw std::runtime_error("machine spec: pair needs <program>:<output>");
      }
      pairs.emplace_back(BitString(v.substr(0, colon)), BitString(v.substr(colon + 1)));
    }
    PrefixMachine m = make_table_machine(std::move(pairs));
    m.set_label(label);
    return m;
  }

  if (kind == "interpreter") {
    for (const auto& [k, v] : kvs) {
      (void)v;
      if (k != "kind" && k != "label") {
        throw std::runtime_error("machine spec: unexpected key " + k);
      }
    }
    PrefixMachine m = PrefixMachine::make_interpreter();
    m.set_label(label);
    return m;
  }

  if (kind == "synthetic") {
    std::string rule;
    std::size_t max_len = 0;
    std::vector<std::pair<std::size_t, BigInt>> explicit_counts;
    for (const auto& [k, v] : kvs) {
      if (k == "kind" || k == "label") continue;
      if (k == "rule") {
        rule = v;
      } else if (k == "max_len") {
        max_len = std::stoull(v);
      } else if (k == "count") {
        auto colon = v.find(':');
        if (colon == std::string::npos) {
          throw std::runtime_error("machine spec: count needs <len>:<count>");
        }
        explicit_counts.emplace_back(std::stoull(v.substr(0, colon)),
                                     BigInt(v.substr(colon + 1)));
      } else {
        throw std::runtime_error("machine spec: unexpected key " + k);
      }
    }
    SyntheticDomainSpec spec;
    if (!rule.empty()) {
      if (rule != "pow2_over_2n2") throw std::runtime_error("machine spec: unknown rule " + rule);
      if (max_len == 0) throw std::runtime_error("machine spec: rule needs max_len=");
      spec = synthetic_pow2_over_2n2(max_len);
    } else {
      if (explicit_counts.empty()) {
        throw std::runtime_error("machine spec: synthetic needs rule= or count= lines");
      }
      std::size_t top = 0;
      for (const auto& [len, c] : explicit_counts) {
        (void)c;
        top = std::max(top, len);
      }
      auto table = std::make_shared<std::map<std::size_t, BigInt>>();
      for (const auto& [len, c] : explicit_counts) (*table)[len] += c;
      spec.count_rule = [table](std::size_t n) {
        auto it = table->find(n);
        return it == table->end() ? BigInt(0) : it->second;
      };
      spec.max_len = std::max(max_len, top);
      spec.label = label;
    }
    PrefixMachine m = build_synthetic_domain(spec);
    if (!label.empty()) m.set_label(label);
    return m;
  }

  throw std::runtime_error("machine spec: unknown kind " + kind);
}

PrefixMachine load_machine_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open machine file: " + path);
  std::string first;
  if (!std::getline(in, first)) throw std::runtime_error("empty machine file: " + path);
  in.seekg(0);
  if (first == "ait-snapshot 1") return PrefixMachine::load_snapshot(in);
  return read_machine_spec(in, path);
}

std::unique_ptr<BitSource> parse_sequence_spec(const std::string& spec) {
  if (spec == "zeros") return std::make_unique<RationalSource>(Rational(0));
  if (spec == "ones") return std::make_unique<PeriodicSource>(BitString(), BitString("1"));

  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon == std::string::npos ? spec.size() : colon);
  std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);

  if (kind == "rational") {
    return std::make_unique<RationalSource>(Rational::parse(rest));
  }
  if (kind == "periodic") {
    auto parts = split(rest, ':');
    if (parts.size() == 1) {
      return std::make_unique<PeriodicSource>(BitString(), BitString(parts[0]));
    }
    if (parts.size() == 2) {
      return std::make_unique<PeriodicSource>(BitString(parts[0]), BitString(parts[1]));
    }
    throw std::invalid_argument("sequence spec: periodic takes <pattern> or <head>:<pattern>");
  }
  if (kind == "partition") {
    auto parts = split(rest, ':');
    if (parts.size() < 2 || parts.size() > 3) {
      throw std::invalid_argument(
          "sequence spec: partition takes <machine-file>:<T>[:<max-refine-stage>]");
    }
    std::uint64_t max_stage = parts.size() == 3 ? std::stoull(parts[2]) : 64;
    return make_partition_source(parts[0], Rational::parse(parts[1]), max_stage);
  }
  throw std::invalid_argument("sequence spec: unknown kind \"" + kind + "\"");
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational list");
  std::vector<Rational> out;
  for (const auto& part : split(text, ',')) {
    if (part.empty()) throw std::invalid_argument("rational list: empty entry");
    out.push_back(Rational::parse(part));
  }
  return out;
}

}  // namespace ait
