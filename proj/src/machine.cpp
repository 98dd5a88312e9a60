#include "ait/machine.hpp"

#include "ait/errors.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ait {

namespace {

// Binary trie used to reject prefix-related pairs on insert.
class PrefixTrie {
 public:
  PrefixTrie() { nodes_.push_back({}); }

  void insert(const BitString& p) {
    std::size_t at = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (nodes_[at].terminal) {
        throw PrefixViolation("prefix violation: \"" + p.str().substr(0, i) +
                              "\" is a prefix of \"" + p.str() + "\"");
      }
      std::size_t kid = nodes_[at].kid[p.bit(i)];
      if (kid == 0) {
        kid = nodes_.size();
        nodes_.push_back({});
        nodes_[at].kid[p.bit(i)] = kid;
      }
      at = kid;
    }
    if (nodes_[at].terminal || nodes_[at].kid[0] != 0 || nodes_[at].kid[1] != 0) {
      throw PrefixViolation("prefix violation: \"" + p.str() +
                            "\" collides with an existing program");
    }
    nodes_[at].terminal = true;
  }

 private:
  struct Node {
    std::size_t kid[2] = {0, 0};
    bool terminal = false;
  };
  std::vector<Node> nodes_;
};

std::uint64_t isqrt_u64(std::uint64_t v) {
  if (v == 0) return 0;
  std::uint64_t x = v, y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + v / x) / 2;
  }
  return x;
}

// Diagonal pairing: stage s covers (program_index, budget) with
// program_index + budget - 1 == diagonal(s).
void unpair_stage(std::uint64_t s, std::uint64_t& program_index, std::uint64_t& budget) {
  std::uint64_t d = (isqrt_u64(8 * s + 1) - 1) / 2;
  while (d * (d + 1) / 2 > s) --d;
  while ((d + 1) * (d + 2) / 2 <= s) ++d;
  std::uint64_t pos = s - d * (d + 1) / 2;
  program_index = pos;
  budget = d - pos + 1;
}

BitString bits_of_value(std::uint64_t value, std::size_t len) {
  return BitString::from_value(value, len);
}

struct ParsedProgram {
  std::size_t header = 0;  // k
  BitString payload;
};

std::optional<ParsedProgram> parse_program(const BitString& p) {
  std::size_t k = 0;
  while (k < p.size() && p.bit(k) == 1) ++k;
  if (k == p.size()) return std::nullopt;        // no terminating 0
  if (p.size() != 2 * k + 1) return std::nullopt;  // payload must be exactly k digits
  ParsedProgram out;
  out.header = k;
  BitString payload;
  for (std::size_t i = k + 1; i < p.size(); ++i) payload.push_back(p.bit(i));
  out.payload = std::move(payload);
  return out;
}

}  // namespace

SimResult run_interpreter_payload(const BitString& payload, std::uint64_t budget) {
  SimResult r;
  std::vector<int> stack;
  std::size_t pc = 0;
  while (true) {
    if (pc == payload.size()) {
      r.status = SimStatus::Dead;  // ran out of opcodes without halting
      return r;
    }
    if (pc + 1 == payload.size()) {
      r.status = SimStatus::Dead;  // dangling half-opcode
      return r;
    }
    if (r.steps == budget) {
      r.status = SimStatus::OutOfBudget;
      return r;
    }
    int op = payload.bit(pc) * 2 + payload.bit(pc + 1);
    pc += 2;
    ++r.steps;
    switch (op) {
      case 0:  // push0
        stack.push_back(0);
        break;
      case 1:  // push1
        stack.push_back(1);
        break;
      case 2:  // emit
        if (stack.empty()) {
          r.status = SimStatus::Dead;
          return r;
        }
        r.output.push_back(stack.back());
        stack.pop_back();
        break;
      case 3:  // halt
        r.status = SimStatus::Halted;
        return r;
    }
  }
}

SimResult run_interpreter_program(const BitString& program, std::uint64_t budget) {
  auto parsed = parse_program(program);
  if (!parsed) {
    SimResult r;
    r.status = SimStatus::Dead;
    return r;
  }
  return run_interpreter_payload(parsed->payload, budget);
}

std::vector<std::pair<BitString, BitString>> interpreter_halting_upto(std::size_t k_max) {
  if (k_max > 26) throw std::invalid_argument("interpreter_halting_upto: k_max too large");
  std::vector<std::pair<BitString, BitString>> out;
  for (std::size_t k = 0; k <= k_max; ++k) {
    BitString header;
    for (std::size_t i = 0; i < k; ++i) header.push_back(1);
    header.push_back(0);
    for (std::uint64_t v = 0; v < (std::uint64_t(1) << k); ++v) {
      BitString payload = bits_of_value(v, k);
      SimResult r = run_interpreter_payload(payload, k / 2 + 1);
      if (r.status == SimStatus::Halted) {
        out.emplace_back(header + payload, r.output);
      }
    }
  }
  return out;
}

PrefixMachine PrefixMachine::make_table(std::vector<std::pair<BitString, BitString>> pairs) {
  PrefixMachine m;
  m.kind_ = MachineKind::Table;
  m.label_ = "table";
  std::sort(pairs.begin(), pairs.end());
  m.table_ = std::move(pairs);
  m.check_table_prefix_free();
  return m;
}

PrefixMachine make_table_machine(std::vector<std::pair<BitString, BitString>> pairs) {
  return PrefixMachine::make_table(std::move(pairs));
}

PrefixMachine PrefixMachine::make_interpreter() {
  PrefixMachine m;
  m.kind_ = MachineKind::Interpreter;
  m.label_ = "interpreter";
  return m;
}

PrefixMachine PrefixMachine::make_synthetic(std::vector<SynthRange> ranges, std::string label) {
  PrefixMachine m;
  m.kind_ = MachineKind::Synthetic;
  m.label_ = std::move(label);
  std::sort(ranges.begin(), ranges.end(),
            [](const SynthRange& a, const SynthRange& b) { return a.len < b.len; });
  for (std::size_t i = 0; i + 1 < ranges.size(); ++i) {
    if (ranges[i].len == ranges[i + 1].len) {
      throw std::invalid_argument("make_synthetic: duplicate length range");
    }
  }
  m.ranges_ = std::move(ranges);
  m.synth_total_ = 0;
  for (const auto& r : m.ranges_) {
    if (r.len == 0 || r.len > 63) throw std::invalid_argument("make_synthetic: length out of range");
    if (r.count == 0) throw std::invalid_argument("make_synthetic: empty range");
    if (r.start + r.count > (std::uint64_t(1) << r.len)) {
      throw std::invalid_argument("make_synthetic: range exceeds length capacity");
    }
    m.synth_total_ += r.count;
  }
  // a length-a word v prefixes a length-b word w exactly when w >> (b-a) == v,
  // so two ranges collide iff the shorter range meets the longer one shifted down
  for (std::size_t i = 0; i < m.ranges_.size(); ++i) {
    for (std::size_t j = i + 1; j < m.ranges_.size(); ++j) {
      const SynthRange& a = m.ranges_[i];
      const SynthRange& b = m.ranges_[j];
      std::size_t d = b.len - a.len;
      std::uint64_t lo = b.start >> d;
      std::uint64_t hi = (b.start + b.count - 1) >> d;
      std::uint64_t alo = a.start, ahi = a.start + a.count - 1;
      if (lo <= ahi && alo <= hi) {
        std::uint64_t v = std::max(alo, lo);
        std::uint64_t w = std::max(b.start, v << d);
        throw PrefixViolation("prefix violation: \"" + bits_of_value(v, a.len).str() +
                              "\" is a prefix of \"" + bits_of_value(w, b.len).str() + "\"");
      }
    }
  }
  return m;
}

void PrefixMachine::check_table_prefix_free() const {
  PrefixTrie trie;
  for (const auto& [p, out] : table_) {
    (void)out;
    trie.insert(p);
  }
}

void PrefixMachine::step_enumeration(std::uint64_t steps) {
  switch (kind_) {
    case MachineKind::Table: {
      std::uint64_t total = table_.size();
      stage_ = std::min(stage_ + steps, total);
      break;
    }
    case MachineKind::Synthetic:
      stage_ = std::min(stage_ + steps, synth_total_);
      break;
    case MachineKind::Interpreter:
      dovetail_steps(steps);
      break;
  }
}

void PrefixMachine::dovetail_steps(std::uint64_t steps) {
  std::uint64_t i, t;
  for (std::uint64_t s = stage_; s < stage_ + steps; ++s) {
    unpair_stage(s, i, t);
    BitString program = BitString::from_index(i);
    if (found_set_.count(program)) continue;
    auto parsed = parse_program(program);
    if (!parsed) continue;
    SimResult r = run_interpreter_payload(parsed->payload, t);
    if (r.status == SimStatus::Halted) {
      // structural prefix-freeness of the encoding is still re-checked
      // against everything found so far
      PrefixTrie trie;
      for (const auto& hp : found_)
        trie.insert(hp.program);
      trie.insert(program);
      found_.push_back(HaltingPair{program, r.output, s});
      found_set_.insert(program);
      ++found_length_counts_[program.size()];
    }
  }
  stage_ += steps;
}

void PrefixMachine::enumerate_fully() {
  switch (kind_) {
    case MachineKind::Table:
      stage_ = table_.size();
      break;
    case MachineKind::Synthetic:
      stage_ = synth_total_;
      break;
    case MachineKind::Interpreter:
      throw std::invalid_argument("enumerate_fully: interpreter domain has no final stage");
  }
}

bool PrefixMachine::fully_enumerated() const {
  switch (kind_) {
    case MachineKind::Table:
      return stage_ >= table_.size();
    case MachineKind::Synthetic:
      return stage_ >= synth_total_;
    case MachineKind::Interpreter:
      return false;
  }
  return false;
}

std::uint64_t PrefixMachine::enumerated_count() const {
  switch (kind_) {
    case MachineKind::Table:
      return std::min<std::uint64_t>(stage_, table_.size());
    case MachineKind::Synthetic:
      return std::min<std::uint64_t>(stage_, synth_total_);
    case MachineKind::Interpreter:
      return found_.size();
  }
  return 0;
}

std::map<std::size_t, std::uint64_t> PrefixMachine::enumerated_length_counts() const {
  std::map<std::size_t, std::uint64_t> counts;
  switch (kind_) {
    case MachineKind::Table: {
      std::uint64_t n = enumerated_count();
      for (std::uint64_t i = 0; i < n; ++i) ++counts[table_[i].first.size()];
      break;
    }
    case MachineKind::Synthetic: {
      std::uint64_t left = enumerated_count();
      for (const auto& r : ranges_) {
        if (left == 0) break;
        std::uint64_t take = std::min<std::uint64_t>(left, r.count);
        counts[r.len] += take;
        left -= take;
      }
      break;
    }
    case MachineKind::Interpreter:
      counts = found_length_counts_;
      break;
  }
  return counts;
}

Rational PrefixMachine::kraft_sum() const {
  Rational sum = 0;
  for (const auto& [len, count] : enumerated_length_counts()) {
    sum += Rational(BigInt(count)) * Rational::pow2(-(long long)len);
  }
  return sum;
}

void PrefixMachine::for_each_enumerated(const std::function<void(const HaltingPair&)>& fn,
                                        std::uint64_t limit) const {
  if (enumerated_count() > limit) {
    throw std::length_error("for_each_enumerated: enumerated set exceeds limit");
  }
  switch (kind_) {
    case MachineKind::Table: {
      std::uint64_t n = enumerated_count();
      for (std::uint64_t i = 0; i < n; ++i) {
        fn(HaltingPair{table_[i].first, table_[i].second, i});
      }
      break;
    }
    case MachineKind::Synthetic: {
      std::uint64_t left = enumerated_count();
      std::uint64_t idx = 0;
      for (const auto& r : ranges_) {
        if (left == 0) break;
        std::uint64_t take = std::min<std::uint64_t>(left, r.count);
        for (std::uint64_t v = 0; v < take; ++v) {
          fn(HaltingPair{bits_of_value(r.start + v, r.len), BitString(), idx++});
        }
        left -= take;
      }
      break;
    }
    case MachineKind::Interpreter:
      for (const auto& hp : found_) fn(hp);
      break;
  }
}

std::vector<HaltingPair> PrefixMachine::enumerated_pairs(std::uint64_t limit) const {
  std::vector<HaltingPair> out;
  out.reserve(enumerated_count());
  for_each_enumerated([&](const HaltingPair& hp) { out.push_back(hp); }, limit);
  return out;
}

std::optional<BitString> PrefixMachine::output_of(const BitString& program,
                                                  std::uint64_t budget) const {
  switch (kind_) {
    case MachineKind::Table: {
      auto it = std::lower_bound(
          table_.begin(), table_.end(), program,
          [](const auto& pair, const BitString& p) { return pair.first < p; });
      if (it != table_.end() && it->first == program) return it->second;
      return std::nullopt;
    }
    case MachineKind::Synthetic: {
      if (program.size() > 63) return std::nullopt;
      for (const auto& r : ranges_) {
        if (r.len != program.size()) continue;
        std::uint64_t v = program.empty() ? 0 : (program.index() + 1) - (std::uint64_t(1) << program.size());
        if (v >= r.start && v < r.start + r.count) return BitString();
      }
      return std::nullopt;
    }
    case MachineKind::Interpreter: {
      SimResult r = run_interpreter_program(program, budget);
      if (r.status == SimStatus::Halted) return r.output;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

ComplexityReport PrefixMachine::complexity_exact(const BitString& target, std::size_t cap,
                                                 std::uint64_t budget) const {
  if (cap > 24) throw std::invalid_argument("complexity_exact: cap above desk-scale bound 24");
  ComplexityReport rep;
  rep.target = target;
  rep.search_cap = cap;
  rep.budget = budget;
  switch (kind_) {
    case MachineKind::Table:
      // definition is in length-then-lex order already
      for (const auto& [p, out] : table_) {
        if (p.size() > cap) break;
        if (out == target) {
          rep.h_value = p.size();
          rep.witness = p;
          break;
        }
      }
      break;
    case MachineKind::Synthetic:
      if (target.empty()) {
        for (const auto& r : ranges_) {
          if (r.len > cap) break;
          rep.h_value = r.len;
          rep.witness = bits_of_value(r.start, r.len);
          break;
        }
      }
      break;
    case MachineKind::Interpreter:
      for (std::size_t k = 0; 2 * k + 1 <= cap && !rep.h_value; ++k) {
        BitString header;
        for (std::size_t i = 0; i < k; ++i) header.push_back(1);
        header.push_back(0);
        for (std::uint64_t v = 0; v < (std::uint64_t(1) << k); ++v) {
          BitString payload = bits_of_value(v, k);
          SimResult r = run_interpreter_payload(payload, budget);
          if (r.status == SimStatus::Halted && r.output == target) {
            rep.h_value = 2 * k + 1;
            rep.witness = header + payload;
            break;
          }
        }
      }
      break;
  }
  return rep;
}

void PrefixMachine::save_snapshot(std::ostream& out) const {
  out << "ait-snapshot 1\n";
  const char* kind = kind_ == MachineKind::Table       ? "table"
                     : kind_ == MachineKind::Interpreter ? "interpreter"
                                                         : "synthetic";
  out << "kind=" << kind << "\n";
  out << "label=" << label_ << "\n";
  out << "stage=" << stage_ << "\n";
  if (kind_ == MachineKind::Synthetic) {
    out << "ranges=" << ranges_.size() << "\n";
    for (const auto& r : ranges_) {
      out << r.len << " " << r.start << " " << r.count << "\n";
    }
    return;
  }
  const std::uint64_t n = kind_ == MachineKind::Table ? table_.size() : found_.size();
  out << "pairs=" << n << "\n";
  if (kind_ == MachineKind::Table) {
    for (const auto& [p, o] : table_) out << p.str() << "\t" << o.str() << "\n";
  } else {
    for (const auto& hp : found_) out << hp.program.str() << "\t" << hp.output.str() << "\n";
  }
}

PrefixMachine PrefixMachine::load_snapshot(std::istream& in) {
  auto fail = [](const std::string& why) -> std::runtime_error {
    return std::runtime_error("snapshot: " + why);
  };
  std::string line;
  if (!std::getline(in, line) || line != "ait-snapshot 1") throw fail("bad magic line");

  auto read_kv = [&](const std::string& key) {
    if (!std::getline(in, line)) throw fail("truncated header");
    if (line.rfind(key + "=", 0) != 0) throw fail("expected " + key + "=");
    return line.substr(key.size() + 1);
  };

  std::string kind = read_kv("kind");
  std::string label = read_kv("label");
  std::uint64_t stage = std::stoull(read_kv("stage"));

  if (kind == "synthetic") {
    std::uint64_t nranges = std::stoull(read_kv("ranges"));
    std::vector<SynthRange> ranges;
    for (std::uint64_t i = 0; i < nranges; ++i) {
      if (!std::getline(in, line)) throw fail("truncated range list");
      std::istringstream ls(line);
      SynthRange r;
      if (!(ls >> r.len >> r.start >> r.count)) throw fail("bad range line");
      ranges.push_back(r);
    }
    PrefixMachine m = make_synthetic(std::move(ranges), label);
    m.stage_ = std::min(stage, m.synth_total_);
    return m;
  }

  std::uint64_t npairs = std::stoull(read_kv("pairs"));
  std::vector<std::pair<BitString, BitString>> pairs;
  for (std::uint64_t i = 0; i < npairs; ++i) {
    if (!std::getline(in, line)) throw fail("truncated pair list");
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw fail("pair line missing tab");
    pairs.emplace_back(BitString(line.substr(0, tab)), BitString(line.substr(tab + 1)));
  }

  if (kind == "table") {
    PrefixMachine m = make_table(std::move(pairs));
    m.label_ = label;
    m.stage_ = std::min<std::uint64_t>(stage, m.table_.size());
    return m;
  }
  if (kind != "interpreter") throw fail("unknown kind " + kind);

  PrefixMachine m = make_interpreter();
  m.label_ = label;
  m.stage_ = stage;
  PrefixTrie trie;
  for (auto& [p, o] : pairs) {
    SimResult r = run_interpreter_program(p, p.size());
    if (r.status != SimStatus::Halted || r.output != o) {
      throw fail("pair \"" + p.str() + "\" does not match interpreter semantics");
    }
    trie.insert(p);
    m.found_.push_back(HaltingPair{p, o, m.found_.size()});
    m.found_set_.insert(p);
    ++m.found_length_counts_[p.size()];
  }
  return m;
}

const std::vector<std::pair<BitString, BitString>>& PrefixMachine::table_pairs() const {
  if (kind_ != MachineKind::Table) throw std::logic_error("table_pairs: not a table machine");
  return table_;
}

const std::vector<SynthRange>& PrefixMachine::synth_ranges() const {
  if (kind_ != MachineKind::Synthetic) throw std::logic_error("synth_ranges: not synthetic");
  return ranges_;
}

}  // namespace ait
