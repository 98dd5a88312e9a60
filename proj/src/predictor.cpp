#include "ait/predictor.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ait {

char prediction_char(Prediction p) {
  switch (p) {
    case Prediction::Zero: return '0';
    case Prediction::One: return '1';
    case Prediction::Suspend: return 'N';
  }
  return '?';
}

std::optional<Prediction> prediction_from_char(char c) {
  switch (c) {
    case '0': return Prediction::Zero;
    case '1': return Prediction::One;
    case 'N': return Prediction::Suspend;
    default: return std::nullopt;
  }
}

PartialPredictor as_partial(const TotalPredictor& f) {
  auto fn = f.eval;
  return PartialPredictor{[fn](const BitString& x) -> std::optional<Prediction> {
    return fn(x);
  }};
}

void PredictorFAO::validate() const {
  if (state_count == 0) throw std::invalid_argument("PredictorFAO: no states");
  if (start >= state_count) throw std::invalid_argument("PredictorFAO: start out of range");
  if (delta.size() != state_count || verdict.size() != state_count) {
    throw std::invalid_argument("PredictorFAO: table sizes disagree with state_count");
  }
  for (const auto& row : delta) {
    if (row[0] >= state_count || row[1] >= state_count) {
      throw std::invalid_argument("PredictorFAO: transition target out of range");
    }
  }
}

TotalPredictor PredictorFAO::as_total() const {
  PredictorFAO copy = *this;
  return TotalPredictor{[copy](const BitString& x) { return fao_run(copy, x); }};
}

Prediction fao_run(const PredictorFAO& m, const BitString& x) {
  std::size_t q = m.start;
  for (std::size_t i = 0; i < x.size(); ++i) q = m.delta[q][x.bit(i)];
  return m.verdict[q];
}

namespace {

struct AuditState {
  PredictabilityReport report;
  void record(Prediction p, int actual, std::size_t n) {
    if (p == Prediction::Suspend) {
      ++report.suspensions;
      return;
    }
    ++report.predictions_made;
    int predicted = (p == Prediction::One) ? 1 : 0;
    if (predicted != actual) report.mispredictions.push_back(n);
  }
};

}  // namespace

PredictabilityReport check_predictability(const PredictorFAO& m, BitSource& x,
                                          std::size_t horizon, std::size_t start) {
  m.validate();
  AuditState audit;
  audit.report.horizon = horizon;
  audit.report.start = start;
  const BitString& full = x.prefix(start + horizon);
  std::size_t q = m.start;
  for (std::size_t i = 0; i < start; ++i) q = m.delta[q][full.bit(i)];
  for (std::size_t n = start; n < start + horizon; ++n) {
    audit.record(m.verdict[q], full.bit(n), n);
    q = m.delta[q][full.bit(n)];
  }
  return audit.report;
}

PredictabilityReport check_predictability(const TotalPredictor& f, BitSource& x,
                                          std::size_t horizon, std::size_t start) {
  AuditState audit;
  audit.report.horizon = horizon;
  audit.report.start = start;
  const BitString& full = x.prefix(start + horizon);
  BitString p = full.first(start);
  for (std::size_t n = start; n < start + horizon; ++n) {
    audit.record(f.eval(p), full.bit(n), n);
    p.push_back(full.bit(n));
  }
  return audit.report;
}

PredictabilityReport check_predictability(const PartialPredictor& f, BitSource& x,
                                          std::size_t horizon, std::size_t start) {
  AuditState audit;
  audit.report.horizon = horizon;
  audit.report.start = start;
  const BitString& full = x.prefix(start + horizon);
  BitString p = full.first(start);
  for (std::size_t n = start; n < start + horizon; ++n) {
    auto v = f.eval(p);
    if (!v) {
      audit.report.undefined_at = n;
      break;
    }
    audit.record(*v, full.bit(n), n);
    p.push_back(full.bit(n));
  }
  return audit.report;
}

MartingaleTotal compile_martingale_total(const TotalPredictor& f) {
  auto fn = f.eval;
  return MartingaleTotal{[fn](const BitString& x) -> Rational {
    Rational capital = 1;
    BitString p;
    for (std::size_t i = 0; i < x.size(); ++i) {
      Prediction v = fn(p);
      int actual = x.bit(i);
      if (v != Prediction::Suspend) {
        int predicted = (v == Prediction::One) ? 1 : 0;
        if (predicted == actual) {
          capital *= Rational(2);
        } else {
          return Rational(0);  // capital is 0 on every extension
        }
      }
      p.push_back(actual);
    }
    return capital;
  }};
}

MartingalePartial compile_martingale_partial(const PartialPredictor& f) {
  auto fn = f.eval;
  return MartingalePartial{[fn](const BitString& x) -> std::optional<Rational> {
    Rational capital = 1;
    bool busted = false;
    BitString p;
    // definedness requires an answer on every proper prefix, even after
    // the capital has already hit zero
    for (std::size_t i = 0; i < x.size(); ++i) {
      auto v = fn(p);
      if (!v) return std::nullopt;
      int actual = x.bit(i);
      if (!busted && *v != Prediction::Suspend) {
        int predicted = (*v == Prediction::One) ? 1 : 0;
        if (predicted == actual) {
          capital *= Rational(2);
        } else {
          busted = true;
        }
      }
      p.push_back(actual);
    }
    return busted ? Rational(0) : capital;
  }};
}

PredictorFAO synth_runlength_fao(std::size_t m, std::size_t L) {
  if (L == 0) throw std::invalid_argument("synth_runlength_fao: L must be >= 1");
  PredictorFAO fao;
  fao.state_count = m + L + 1;
  fao.start = 0;
  fao.delta.resize(fao.state_count);
  fao.verdict.assign(fao.state_count, Prediction::Suspend);
  // states 0..m-1: swallow the first m digits unconditionally
  for (std::size_t i = 0; i < m; ++i) {
    fao.delta[i][0] = i + 1;
    fao.delta[i][1] = i + 1;
  }
  // states m..m+L: m+j means "j trailing zeros seen since position m,
  // capped at L"; a 1 resets to m, a 0 advances (self-loop at the cap)
  for (std::size_t j = 0; j <= L; ++j) {
    std::size_t q = m + j;
    fao.delta[q][1] = m;
    fao.delta[q][0] = (j < L) ? q + 1 : q;
  }
  fao.verdict[m + L] = Prediction::One;
  return fao;
}

std::optional<RunLengthParams> estimate_runlength_params(const BitString& x,
                                                         const Rational& tail_fraction) {
  if (tail_fraction.sign() <= 0 || tail_fraction > Rational(1)) {
    throw std::invalid_argument("estimate_runlength_params: tail_fraction must be in (0,1]");
  }
  if (x.empty()) return std::nullopt;

  // tail window = trailing ceil(tail_fraction * |x|) positions
  BigInt numer = tail_fraction.num() * x.size();
  BigInt tail_len_big = (numer + tail_fraction.den() - 1) / tail_fraction.den();
  std::size_t tail_len = std::size_t(tail_len_big);
  std::size_t tail_start = x.size() - tail_len + 1;  // 1-based

  // collect maximal zero-runs as (start, end, complete) with 1-based ends
  std::size_t L = 0;
  bool found_complete_in_tail = false;
  std::size_t i = 0;
  struct Run {
    std::size_t end;
    std::size_t len;
    bool complete;
  };
  std::vector<Run> runs;
  while (i < x.size()) {
    if (x.bit(i) != 0) {
      ++i;
      continue;
    }
    std::size_t begin = i;
    while (i < x.size() && x.bit(i) == 0) ++i;
    bool complete = (i < x.size());  // followed by a 1 inside x
    runs.push_back(Run{i, i - begin, complete});  // end is 1-based here (i is one past, 0-based)
  }
  for (const auto& r : runs) {
    if (r.complete && r.end >= tail_start) {
      found_complete_in_tail = true;
      if (r.len > L) L = r.len;
    }
  }
  if (!found_complete_in_tail) return std::nullopt;

  std::size_t m = 0;
  for (const auto& r : runs) {
    if (r.len > L) m = r.end;
  }
  return RunLengthParams{m, L};
}

RunBoundVerdict check_run_bound(BitSource& x, std::size_t d, std::size_t horizon) {
  if (d == 0) throw std::invalid_argument("check_run_bound: d must be >= 1");
  const BitString& full = x.prefix(horizon);
  std::size_t run = 0;
  for (std::size_t i = 0; i < horizon; ++i) {
    if (full.bit(i) == 0) {
      if (++run == d) return RunBoundVerdict{true, i + 1};
    } else {
      run = 0;
    }
  }
  return RunBoundVerdict{false, horizon};  // clean up to the audited horizon
}

void write_fao(std::ostream& out, const PredictorFAO& m) {
  out << "ait-fao 1\n";
  out << "states=" << m.state_count << "\n";
  out << "start=" << m.start << "\n";
  for (std::size_t q = 0; q < m.state_count; ++q) {
    out << "delta " << q << " 0 " << m.delta[q][0] << "\n";
    out << "delta " << q << " 1 " << m.delta[q][1] << "\n";
  }
  for (std::size_t q = 0; q < m.state_count; ++q) {
    out << "verdict " << q << " " << prediction_char(m.verdict[q]) << "\n";
  }
}

PredictorFAO read_fao(std::istream& in) {
  auto fail = [](const std::string& why) -> std::runtime_error {
    return std::runtime_error("fao table: " + why);
  };
  std::string line;
  if (!std::getline(in, line) || line != "ait-fao 1") throw fail("bad magic line");
  auto read_kv = [&](const std::string& key) {
    if (!std::getline(in, line)) throw fail("truncated header");
    if (line.rfind(key + "=", 0) != 0) throw fail("expected " + key + "=");
    return line.substr(key.size() + 1);
  };
  PredictorFAO m;
  m.state_count = std::stoull(read_kv("states"));
  m.start = std::stoull(read_kv("start"));
  m.delta.assign(m.state_count, {0, 0});
  m.verdict.assign(m.state_count, Prediction::Suspend);
  std::vector<bool> seen_delta(m.state_count * 2, false);
  std::vector<bool> seen_verdict(m.state_count, false);
  for (std::size_t i = 0; i < m.state_count * 3; ++i) {
    if (!std::getline(in, line)) throw fail("truncated table");
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "delta") {
      std::size_t q, sym, to;
      if (!(ls >> q >> sym >> to) || q >= m.state_count || sym > 1) throw fail("bad delta line");
      m.delta[q][sym] = to;
      seen_delta[q * 2 + sym] = true;
    } else if (tag == "verdict") {
      std::size_t q;
      std::string v;
      if (!(ls >> q >> v) || q >= m.state_count || v.size() != 1) throw fail("bad verdict line");
      auto p = prediction_from_char(v[0]);
      if (!p) throw fail("bad verdict symbol");
      m.verdict[q] = *p;
      seen_verdict[q] = true;
    } else {
      throw fail("unknown line tag " + tag);
    }
  }
  for (bool s : seen_delta)
    if (!s) throw fail("missing delta entries");
  for (bool s : seen_verdict)
    if (!s) throw fail("missing verdict entries");
  m.validate();
  return m;
}

void write_report_csv(std::ostream& out, const PredictabilityReport& r) {
  out << "horizon,start,predictions_made,suspensions,misprediction_count,"
         "mispredictions,undefined_at\n";
  out << r.horizon << "," << r.start << "," << r.predictions_made << "," << r.suspensions
      << "," << r.mispredictions.size() << ",";
  for (std::size_t i = 0; i < r.mispredictions.size(); ++i) {
    if (i) out << ";";
    out << r.mispredictions[i];
  }
  out << ",";
  if (r.undefined_at) out << *r.undefined_at;
  out << "\n";
}

}  // namespace ait
