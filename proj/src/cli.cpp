#include "ait/cli.hpp"

#include "ait/bit_source.hpp"
#include "ait/bits.hpp"
#include "ait/machine.hpp"
#include "ait/martingale.hpp"
#include "ait/partition.hpp"
#include "ait/predictor.hpp"
#include "ait/specio.hpp"

#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ait::cli {

namespace {

// CSV goes to --out when given, otherwise to stdout.
void emit_csv(const RunConfig& cfg, std::ostream& out,
              const std::function<void(std::ostream&)>& write) {
  if (cfg.out_path.empty()) {
    write(out);
    return;
  }
  std::ofstream f(cfg.out_path);
  if (!f) throw std::runtime_error("cannot open output file: " + cfg.out_path);
  write(f);
}

PrefixMachine load_machine(const RunConfig& cfg) {
  if (cfg.machine_path.empty()) {
    throw std::invalid_argument(cfg.command + ": --machine is required");
  }
  return load_machine_file(cfg.machine_path);
}

int cmd_machine_enum(const RunConfig& cfg, std::ostream& out) {
  PrefixMachine m = load_machine(cfg);
  m.step_enumeration(cfg.steps);
  const char* kind = m.kind() == MachineKind::Table       ? "table"
                     : m.kind() == MachineKind::Interpreter ? "interpreter"
                                                            : "synthetic";
  out << "kind=" << kind << " label=" << m.label() << " stage=" << m.stage()
      << " terms=" << m.enumerated_count() << " kraft=" << m.kraft_sum().fraction_str()
      << "\n";
  if (!cfg.snapshot_out.empty()) {
    std::ofstream f(cfg.snapshot_out);
    if (!f) throw std::runtime_error("cannot open snapshot file: " + cfg.snapshot_out);
    m.save_snapshot(f);
  }
  return 0;
}

int cmd_phase_table(const RunConfig& cfg, std::ostream& out) {
  if (cfg.temps.empty()) {
    throw std::invalid_argument("phase-table: --temps is required and must be nonempty");
  }
  PrefixMachine m = load_machine(cfg);
  if (m.kind() == MachineKind::Interpreter) {
    if (m.stage() == 0) m.step_enumeration(cfg.steps);
  } else {
    m.enumerate_fully();
  }
  auto rows = phase_table(m, cfg.temps, cfg.precision_bits);
  emit_csv(cfg, out, [&](std::ostream& o) { write_phase_csv(o, rows, cfg.decimal_places); });
  return 0;
}

struct ResolvedPredictor {
  PredictorFAO fao;
  std::optional<RunLengthParams> estimated;
  std::size_t start = 0;  // first audited position (after any training sample)
};

// Exactly one of --m/--L, --predictor, --estimate selects the predictor.
ResolvedPredictor resolve_predictor(const RunConfig& cfg, BitSource& seq) {
  int ways = int(cfg.m.has_value() || cfg.L.has_value()) + int(!cfg.predictor_path.empty()) +
             int(cfg.estimate.has_value());
  if (ways != 1) {
    throw std::invalid_argument(
        cfg.command + ": pick exactly one of --m/--L, --predictor, --estimate");
  }
  ResolvedPredictor r;
  if (cfg.m || cfg.L) {
    if (!cfg.m || !cfg.L) {
      throw std::invalid_argument(cfg.command + ": --m and --L go together");
    }
    r.fao = synth_runlength_fao(*cfg.m, *cfg.L);
    return r;
  }
  if (!cfg.predictor_path.empty()) {
    std::ifstream f(cfg.predictor_path);
    if (!f) throw std::runtime_error("cannot open predictor file: " + cfg.predictor_path);
    r.fao = read_fao(f);
    return r;
  }
  std::size_t sample_len = *cfg.estimate;
  if (sample_len == 0) throw std::invalid_argument("--estimate: sample length must be >= 1");
  BitString sample = seq.prefix(sample_len);
  auto params = estimate_runlength_params(sample, cfg.tail_fraction);
  if (!params) {
    throw std::domain_error("estimate: sample tail contains no complete zero-run");
  }
  r.estimated = params;
  r.fao = synth_runlength_fao(params->m, params->L);
  r.start = sample_len;
  return r;
}

int cmd_predict(const RunConfig& cfg, std::ostream& out) {
  if (cfg.sequence_spec.empty()) {
    throw std::invalid_argument("predict: --sequence is required");
  }
  auto seq = parse_sequence_spec(cfg.sequence_spec);
  ResolvedPredictor rp = resolve_predictor(cfg, *seq);
  PredictabilityReport rep = check_predictability(rp.fao, *seq, cfg.horizon, rp.start);

  if (rp.estimated) {
    out << "estimated m=" << rp.estimated->m << " L=" << rp.estimated->L << "\n";
  }
  out << "horizon=" << rep.horizon << " start=" << rep.start
      << " predictions=" << rep.predictions_made
      << " mispredictions=" << rep.mispredictions.size()
      << " suspensions=" << rep.suspensions << "\n";
  if (!cfg.out_path.empty()) {
    emit_csv(cfg, out, [&](std::ostream& o) { write_report_csv(o, rep); });
  }
  return rep.mispredictions.empty() ? 0 : 1;
}

int cmd_martingale(const RunConfig& cfg, std::ostream& out) {
  if (cfg.sequence_spec.empty()) {
    throw std::invalid_argument("martingale: --sequence is required");
  }
  auto seq = parse_sequence_spec(cfg.sequence_spec);
  ResolvedPredictor rp = resolve_predictor(cfg, *seq);
  MartingaleTotal bet = compile_martingale_total(rp.fao.as_total());
  CapitalTrace trace = run_capital(bet, *seq, cfg.horizon);

  if (rp.estimated) {
    out << "estimated m=" << rp.estimated->m << " L=" << rp.estimated->L << "\n";
  }
  out << "horizon=" << cfg.horizon << " final_capital="
      << trace.values.back().fraction_str() << "\n";
  if (cfg.threshold) {
    SuccessObservation obs{false, 0};
    for (std::size_t i = 0; i < trace.values.size(); ++i) {
      if (trace.values[i] >= *cfg.threshold) {
        obs = SuccessObservation{true, i};
        break;
      }
    }
    if (obs.reached) {
      out << "threshold=" << cfg.threshold->fraction_str() << " reached_at=" << obs.position
          << "\n";
    } else {
      out << "threshold=" << cfg.threshold->fraction_str() << " reached_at=never\n";
    }
  }
  emit_csv(cfg, out, [&](std::ostream& o) { write_capital_csv(o, trace); });
  return 0;
}

int cmd_complexity(const RunConfig& cfg, std::ostream& out) {
  PrefixMachine m = load_machine(cfg);
  BitString target(cfg.target);
  ComplexityReport rep = m.complexity_exact(target, cfg.cap, cfg.budget);
  out << "target=" << (target.empty() ? "(empty)" : target.str()) << " cap=" << rep.search_cap
      << " budget=" << rep.budget << " h=";
  if (rep.h_value) {
    out << *rep.h_value << " witness=" << rep.witness->str() << "\n";
  } else {
    out << "NOT-FOUND\n";
  }
  return 0;
}

}  // namespace

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "machine-enum") return cmd_machine_enum(cfg, out);
    if (cfg.command == "phase-table") return cmd_phase_table(cfg, out);
    if (cfg.command == "predict") return cmd_predict(cfg, out);
    if (cfg.command == "martingale") return cmd_martingale(cfg, out);
    if (cfg.command == "complexity") return cmd_complexity(cfg, out);
    err << "error: unknown command \"" << cfg.command << "\"\n";
    return 2;
  } catch (const std::domain_error& e) {
    // negative findings (e.g. estimation failure): reported, not a crash
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ait::cli
