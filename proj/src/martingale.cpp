#include "ait/martingale.hpp"

#include <ostream>
#include <stdexcept>

namespace ait {

namespace {

constexpr std::size_t kMaxFairnessDepth = 16;

// Iterate all strings of a given length in lex order.
template <typename Fn>
void for_each_string(std::size_t len, Fn&& fn) {
  BitString x;
  for (std::size_t i = 0; i < len; ++i) x.push_back(0);
  while (true) {
    fn(const_cast<const BitString&>(x));
    // numeric increment
    std::size_t i = len;
    while (i > 0 && x.bit(i - 1) == 1) --i;
    if (i == 0) return;
    // x[i-1] == 0: set it, clear everything after
    BitString next = x.first(i - 1);
    next.push_back(1);
    while (next.size() < len) next.push_back(0);
    x = next;
  }
}

}  // namespace

FairnessVerdict check_fairness(const MartingaleTotal& b, std::size_t depth) {
  if (depth > kMaxFairnessDepth) {
    throw std::invalid_argument("check_fairness: depth above exhaustive bound 16");
  }
  for (std::size_t len = 0; len < depth; ++len) {
    FairnessVerdict bad;
    bool found = false;
    for_each_string(len, [&](const BitString& x) {
      if (found) return;
      Rational vx = b.eval(x);
      Rational v0 = b.eval(x.with(0));
      Rational v1 = b.eval(x.with(1));
      if (vx.sign() < 0 || v0.sign() < 0 || v1.sign() < 0 ||
          v0 + v1 != vx * Rational(2)) {
        bad.witness = x;
        found = true;
      }
    });
    if (found) {
      bad.pass = false;
      return bad;
    }
  }
  return FairnessVerdict{true, std::nullopt};
}

FairnessVerdict check_fairness(const MartingalePartial& b, std::size_t depth) {
  if (depth > kMaxFairnessDepth) {
    throw std::invalid_argument("check_fairness: depth above exhaustive bound 16");
  }
  for (std::size_t len = 0; len < depth; ++len) {
    FairnessVerdict bad;
    bool found = false;
    for_each_string(len, [&](const BitString& x) {
      if (found) return;
      auto vx = b.eval(x);
      auto v0 = b.eval(x.with(0));
      auto v1 = b.eval(x.with(1));
      auto flag = [&] {
        bad.witness = x;
        found = true;
      };
      if (v0.has_value() != v1.has_value()) return flag();  // children defined together
      if (!vx.has_value() && v0.has_value()) return flag();  // domain closed under prefixes
      if (vx && vx->sign() < 0) return flag();
      if (v0 && (v0->sign() < 0 || v1->sign() < 0)) return flag();
      if (vx && v0 && *v0 + *v1 != *vx * Rational(2)) return flag();
    });
    if (found) {
      bad.pass = false;
      return bad;
    }
  }
  return FairnessVerdict{true, std::nullopt};
}

CapitalTrace run_capital(const MartingaleTotal& b, BitSource& x, std::size_t n) {
  CapitalTrace t;
  t.values.reserve(n + 1);
  const BitString& full = x.prefix(n);
  BitString p;
  for (std::size_t i = 0; i <= n; ++i) {
    if (i > 0) p.push_back(full.bit(i - 1));
    t.values.push_back(b.eval(p));
  }
  t.defined_up_to = n;
  return t;
}

CapitalTrace run_capital(const MartingalePartial& b, BitSource& x, std::size_t n) {
  CapitalTrace t;
  const BitString& full = x.prefix(n);
  BitString p;
  for (std::size_t i = 0; i <= n; ++i) {
    if (i > 0) p.push_back(full.bit(i - 1));
    auto v = b.eval(p);
    if (!v) break;
    t.values.push_back(*v);
  }
  if (t.values.empty()) {
    throw std::invalid_argument("run_capital: partial martingale undefined at the empty string");
  }
  t.defined_up_to = t.values.size() - 1;
  return t;
}

namespace {

SuccessObservation scan_trace(const CapitalTrace& t, const Rational& threshold) {
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    if (t.values[i] >= threshold) return SuccessObservation{true, i};
  }
  return SuccessObservation{false, 0};
}

}  // namespace

SuccessObservation succeeds_empirically(const MartingaleTotal& b, BitSource& x,
                                        const Rational& threshold, std::size_t horizon) {
  return scan_trace(run_capital(b, x, horizon), threshold);
}

SuccessObservation succeeds_empirically(const MartingalePartial& b, BitSource& x,
                                        const Rational& threshold, std::size_t horizon) {
  return scan_trace(run_capital(b, x, horizon), threshold);
}

void write_capital_csv(std::ostream& out, const CapitalTrace& trace) {
  out << "n,capital_num,capital_den\n";
  for (std::size_t i = 0; i < trace.values.size(); ++i) {
    out << i << "," << trace.values[i].num() << "," << trace.values[i].den() << "\n";
  }
}

}  // namespace ait
