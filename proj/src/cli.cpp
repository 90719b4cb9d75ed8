#include "pduty/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "pduty/audit.hpp"
#include "pduty/decision.hpp"
#include "pduty/duty.hpp"
#include "pduty/monte_carlo.hpp"
#include "pduty/ranking.hpp"
#include "pduty/serialization.hpp"
#include "pduty/zones.hpp"

namespace pduty::cli {

namespace {

namespace fs = std::filesystem;

/// An input problem the user can fix; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SignalFlags {
  std::string form = "linear";
  double gain = signal::Exponential{}.gain;
  double steepness = signal::Logistic{}.steepness;
  double midpoint = signal::Logistic{}.midpoint;

  void attach(CLI::App* app) {
    app->add_option("--g", form, "Signal function g")
        ->check(CLI::IsMember({"linear", "exponential", "logistic"}))
        ->capture_default_str();
    app->add_option("--gain", gain, "Exponential gain (> 0)")->capture_default_str();
    app->add_option("--steepness", steepness, "Logistic steepness (> 0)")->capture_default_str();
    app->add_option("--midpoint", midpoint, "Logistic midpoint in [0, 1]")->capture_default_str();
  }

  SignalFunction build() const {
    if (form == "exponential") return SignalFunction::exponential(gain);
    if (form == "logistic") return SignalFunction::logistic(steepness, midpoint);
    return SignalFunction::linear();
  }
};

CLI::Option* unit_option(CLI::App* app, const std::string& name, double& value,
                         const std::string& help) {
  return app->add_option(name, value, help)->check(CLI::Range(0.0, 1.0));
}

/// Maps a DomainError field back to the flag that supplied it.
std::string flag_for(const std::string& field) {
  static const std::map<std::string, std::string> kFlags = {
      {"k", "--k"},           {"hi", "--hi"},         {"c_signal", "--c"},
      {"gain", "--gain"},     {"steepness", "--steepness"},
      {"midpoint", "--midpoint"}, {"lambda", "--lambda"}, {"defer_below", "--defer-threshold"},
      {"step", "--grid-step"}, {"steps", "--steps"},   {"g", "--g"}};
  const auto it = kFlags.find(field);
  return it == kFlags.end() ? field : it->second;
}

AuditClock make_clock(const std::string& fixed_time) {
  if (fixed_time.empty()) return audit_now;
  const AuditTime t = parse_timestamp(fixed_time);
  return [t] { return t; };
}

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw IoError(path.parent_path(), "cannot create directory");
  }
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError(path, "cannot open for writing");
  return os;
}

void close_output(std::ofstream& os, const fs::path& path) {
  os.flush();
  if (!os) throw IoError(path, "write failed");
}

std::string pct(double part, double total) {
  if (!(total > 0.0)) return "-";
  return format_fixed(100.0 * part / total, 0) + "%";
}

void print_breakdown_table(std::ostream& out, const DutyInputs& in, const SignalFunction& sf,
                           const BaselineHumility& baseline, const DutyBreakdown& b,
                           Recommendation r) {
  out << "inputs  K=" << format_fixed(in.k()) << " HI=" << format_fixed(in.hi())
      << " C_signal=" << format_fixed(in.c_signal()) << " g=" << sf.name()
      << " lambda=" << format_fixed(baseline.lambda()) << '\n';
  out << "duties  D_a=" << format_fixed(b.action) << " D_r=" << format_fixed(b.repair)
      << " D_total=" << format_fixed(b.total) << '\n';
  out << "result  " << recommendation_name(r) << " (action " << pct(b.action, b.total)
      << " / repair " << pct(b.repair, b.total) << ")\n";
}

void print_summary(std::ostream& out, const SimulationSummary& s, const SimulationConfig& c) {
  out << "g=" << c.signal_function.name() << " lambda=" << format_fixed(c.baseline.lambda())
      << " n=" << s.n << " seed=" << c.seed << '\n'
      << "  mean_total=" << format_fixed(s.mean_total, 4)
      << " var_total=" << format_fixed(s.var_total, 4)
      << " mean_action=" << format_fixed(s.mean_action, 4)
      << " mean_repair=" << format_fixed(s.mean_repair, 4) << '\n'
      << "  pearson_k_total="
      << (s.pearson_k_total ? format_fixed(*s.pearson_k_total, 4) : std::string("n/a"))
      << " max_conservation_residual=" << format_double(s.max_conservation_residual) << '\n'
      << "  zones:";
  for (Zone z : kAllZones) out << ' ' << zone_name(z) << '=' << s.zone_counts[z];
  out << '\n';
}

// --- eval --------------------------------------------------------------------

struct EvalArgs {
  double k = 0, hi = 0, c = 0;
  SignalFlags signal;
  double lambda = BaselineHumility::kDefault;
  double defer = PolicyThresholds::kDefaultDeferBelow;
  bool json = false;
  std::string audit;
  std::string id = "cli-eval";
  std::string fixed_time;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const Scenario s{a.id, "command-line evaluation", DutyInputs(a.k, a.hi, a.c), a.signal.build(),
                   BaselineHumility(a.lambda)};
  const PolicyThresholds t(a.defer);
  const auto clock = make_clock(a.fixed_time);

  std::unique_ptr<AuditSink> sink;
  if (a.audit.empty()) {
    sink = std::make_unique<NullAuditSink>();
  } else {
    sink = std::make_unique<JsonlAuditSink>(a.audit);
  }
  const auto outcome = evaluate_scenario(s, t, *sink, clock);
  if (outcome.audit_error) throw IoError(a.audit, *outcome.audit_error);

  print_breakdown_table(out, s.inputs, s.signal_function, s.baseline, outcome.breakdown,
                        outcome.recommendation);
  if (a.json) out << audit_to_json(outcome.record).dump() << '\n';
  return kSuccess;
}

// --- simulate ----------------------------------------------------------------

struct SimulateArgs {
  std::size_t n = 100000;
  std::uint64_t seed = 42;
  SignalFlags signal;
  double lambda = BaselineHumility::kDefault;
  std::string out = ".";
  unsigned workers = 1;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  const SimulationConfig config{a.n, a.seed, a.signal.build(), BaselineHumility(a.lambda)};
  config.validate();
  const auto summary = simulate(config, a.workers);

  const fs::path dir(a.out);
  const auto csv_path = dir / "trials.csv";
  auto csv = open_output(csv_path);
  write_trials_csv(csv, config);
  close_output(csv, csv_path);

  const auto json_path = dir / "summary.json";
  auto js = open_output(json_path);
  js << summary_to_json(summary, config).dump(2) << '\n';
  close_output(js, json_path);

  print_summary(out, summary, config);
  out << "wrote " << csv_path.string() << '\n' << "wrote " << json_path.string() << '\n';
  return kSuccess;
}

// --- protocol ----------------------------------------------------------------

struct ProtocolArgs {
  std::size_t n = 100000;
  std::uint64_t seed = 42;
  double lambda = BaselineHumility::kDefault;
  double gain = 1.0;
  std::string out = "protocol_out";
  unsigned workers = 1;
};

int cmd_protocol(const ProtocolArgs& a, std::ostream& out) {
  auto configs = default_protocol_configs(a.seed, a.n, a.lambda);
  configs[1].signal_function = SignalFunction::exponential(a.gain);
  ProtocolOptions options;
  options.workers = a.workers;
  options.output_dir = fs::path(a.out);
  const auto report = run_protocol(configs, options);

  for (const auto& run : report.runs) print_summary(out, run.summary, run.config);

  constexpr double kConservationTolerance = 1e-9;
  out << "conservation: max residual over " << report.runs.size() << " x " << a.n
      << " trials = " << format_double(report.max_conservation_residual)
      << (report.max_conservation_residual < kConservationTolerance ? " < 1e-9 OK" : " >= 1e-9 FAIL")
      << '\n';

  const auto& st = report.stability;
  out << "stability: var_total(lambda=" << format_fixed(st.lambda_on, 2)
      << ")=" << format_fixed(st.var_on, 5) << " var_total(lambda=" << format_fixed(st.lambda_off, 2)
      << ")=" << format_fixed(st.var_off, 5) << " ratio=" << format_fixed(st.ratio, 4)
      << " first-difference ratio=" << format_fixed(st.diff_ratio, 4) << '\n';

  out << "exponential gain sweep:";
  for (const auto& [gain, mean] : report.exponential_gain_means) {
    out << " gain=" << format_fixed(gain, 1) << " mean_total=" << format_fixed(mean, 4);
  }
  out << '\n';

  out << "claimed vs measured:\n";
  for (const auto& d : report.divergences) {
    std::ostringstream claimed, measured;
    claimed << std::setprecision(4) << d.claimed_value;
    measured << std::setprecision(6) << d.measured;
    out << "  " << std::left << std::setw(52) << d.claim << " claimed=" << std::setw(8) << claimed.str()
        << " measured=" << std::setw(12) << measured.str()
        << (d.reproduced ? " reproduced" : " DIVERGES") << '\n';
  }
  for (const auto& f : report.written_files) out << "wrote " << f.string() << '\n';
  return kSuccess;
}

// --- ranking -----------------------------------------------------------------

struct RankingArgs {
  std::size_t n = 1000;
  std::uint64_t seed = 42;
  double grid_step = 0.05;
  SignalFlags signal;
  std::string out = ".";
  std::string check_trajectories;
  unsigned workers = 1;
};

int cmd_ranking(const RankingArgs& a, std::ostream& out) {
  if (!a.check_trajectories.empty()) {
    std::ifstream is(a.check_trajectories);
    if (!is) throw IoError(a.check_trajectories, "cannot open");
    const auto rows = read_trajectory_csv(is);
    const auto verdict = verify_trajectories(rows);
    if (verdict.preserved) {
      out << "trajectories preserved (" << rows.size() << " rows)\n";
      return kSuccess;
    }
    out << "ranking violated\nfirst_violation: hi=" << format_double(*verdict.first_violation_hi)
        << " option=" << *verdict.first_violation_option << '\n';
    return kVerificationFailure;
  }

  const auto grid = hi_grid(a.grid_step);
  const auto sf = a.signal.build();
  const auto report = run_ranking_suite(a.n, a.seed, grid, sf, a.workers);

  const auto reference = RankingScenario(reference_scenario().k(), reference_scenario().c_signal(), sf);
  const auto rows = trajectory_rows(reference, check_ranking(reference, grid));
  const fs::path dir(a.out);
  const auto csv_path = dir / "ranking_trajectories.csv";
  auto csv = open_output(csv_path);
  write_trajectory_csv(csv, rows);
  close_output(csv, csv_path);
  const auto json_path = dir / "ranking_report.json";
  auto js = open_output(json_path);
  js << ranking_report_to_json(report).dump(2) << '\n';
  close_output(js, json_path);

  out << "g=" << sf.name() << " grid=" << grid.size() << " points in [0, "
      << format_fixed(grid.back(), 2) << "]\n"
      << "preserved " << report.preserved_count << "/" << report.n_scenarios << '\n';
  out << "wrote " << csv_path.string() << '\n' << "wrote " << json_path.string() << '\n';
  if (!report.all_preserved()) {
    out << "first_violation: scenario=" << report.first_violation->scenario
        << " hi=" << format_double(report.first_violation->hi) << '\n';
    return kVerificationFailure;
  }
  return kSuccess;
}

// --- batch -------------------------------------------------------------------

struct BatchArgs {
  std::string file;
  bool worked_cases = false;
  std::string audit;
  double defer = PolicyThresholds::kDefaultDeferBelow;
  std::string format = "table";
  std::string fixed_time;
};

int cmd_batch(const BatchArgs& a, std::ostream& out) {
  if (a.worked_cases == !a.file.empty()) {
    throw UsageError("batch: give exactly one of a scenario file or --paper-cases");
  }
  std::vector<Scenario> scenarios;
  if (a.worked_cases) {
    scenarios = worked_cases();
  } else {
    std::ifstream is(a.file, std::ios::binary);
    if (!is) throw IoError(a.file, "cannot open");
    std::stringstream buf;
    buf << is.rdbuf();
    scenarios = parse_scenarios(buf.str());
  }

  const PolicyThresholds t(a.defer);
  const auto clock = make_clock(a.fixed_time);
  std::unique_ptr<AuditSink> sink;
  if (a.audit.empty()) {
    sink = std::make_unique<NullAuditSink>();
  } else {
    sink = std::make_unique<JsonlAuditSink>(a.audit);
  }

  std::vector<ScenarioOutcome> outcomes;
  for (const auto& s : scenarios) {
    outcomes.push_back(evaluate_scenario(s, t, *sink, clock));
    if (outcomes.back().audit_error) throw IoError(a.audit, *outcomes.back().audit_error);
  }

  if (a.format == "json") {
    auto arr = nlohmann::json::array();
    for (const auto& o : outcomes) arr.push_back(audit_to_json(o.record));
    out << arr.dump(2) << '\n';
  } else if (a.format == "csv") {
    out << "id,k,hi,c_signal,d_action,d_repair,d_total,recommendation\n";
    for (const auto& o : outcomes) {
      const auto& r = o.record;
      out << r.scenario_id << ',' << format_double(r.inputs.k()) << ','
          << format_double(r.inputs.hi()) << ',' << format_double(r.inputs.c_signal()) << ','
          << format_double(o.breakdown.action) << ',' << format_double(o.breakdown.repair) << ','
          << format_double(o.breakdown.total) << ',' << recommendation_name(o.recommendation)
          << '\n';
    }
  } else {
    out << std::left << std::setw(22) << "id" << std::setw(7) << "K" << std::setw(7) << "HI"
        << std::setw(7) << "C" << std::setw(8) << "D_a" << std::setw(8) << "D_r" << std::setw(9)
        << "D_total" << "recommendation\n";
    for (const auto& o : outcomes) {
      const auto& r = o.record;
      out << std::left << std::setw(22) << r.scenario_id << std::setw(7)
          << format_fixed(r.inputs.k(), 2) << std::setw(7) << format_fixed(r.inputs.hi(), 2)
          << std::setw(7) << format_fixed(r.inputs.c_signal(), 2) << std::setw(8)
          << format_fixed(o.breakdown.action) << std::setw(8) << format_fixed(o.breakdown.repair)
          << std::setw(9) << format_fixed(o.breakdown.total)
          << recommendation_name(o.recommendation) << '\n';
    }
    out << outcomes.size() << " scenario(s)\n";
  }
  return kSuccess;
}

// --- sweep -------------------------------------------------------------------

struct SweepArgs {
  double k = 0, c = 0;
  SignalFlags signal;
  std::size_t steps = 11;
  double defer = PolicyThresholds::kDefaultDeferBelow;
  std::string out;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  const auto sf = a.signal.build();
  const auto points = humility_sweep(a.k, a.c, sf, a.steps, PolicyThresholds(a.defer));
  const double crossover = crossover_humility(a.c, sf);

  auto write = [&](std::ostream& os) {
    os << "hi,d_action,d_repair,d_total,recommendation,crossover\n";
    bool flagged = false;
    for (const auto& p : points) {
      // First grid point at or past the analytic crossover.
      const bool flag = !flagged && a.k > 0.0 && p.hi >= crossover;
      flagged = flagged || flag;
      os << format_double(p.hi) << ',' << format_double(p.breakdown.action) << ','
         << format_double(p.breakdown.repair) << ',' << format_double(p.breakdown.total) << ','
         << recommendation_name(p.recommendation) << ',' << (flag ? 1 : 0) << '\n';
    }
  };

  if (a.out.empty()) {
    write(out);
  } else {
    const fs::path path(a.out);
    auto os = open_output(path);
    write(os);
    close_output(os, path);
    out << "crossover hi* = " << format_fixed(crossover, 6) << '\n'
        << "wrote " << path.string() << '\n';
  }
  return kSuccess;
}

// --- zones -------------------------------------------------------------------

struct ZonesArgs {
  double step = 0.1;
  std::string format = "table";
};

int cmd_zones(const ZonesArgs& a, std::ostream& out) {
  if (!(a.step > 0.0 && a.step <= 1.0)) throw DomainError("step", "--step must lie in (0, 1]");
  const auto intervals = static_cast<std::size_t>(std::llround(1.0 / a.step));
  std::vector<double> axis;
  for (std::size_t i = 0; i <= intervals; ++i) {
    axis.push_back(std::min(1.0, static_cast<double>(i) * a.step));
  }

  ZoneCounts counts;
  if (a.format == "csv") {
    out << "hi,c_signal,zone\n";
    for (double hi : axis) {
      for (double c : axis) {
        const Zone z = classify_zone(hi, c);
        counts[z] += 1;
        out << format_double(hi) << ',' << format_double(c) << ',' << zone_name(z) << '\n';
      }
    }
    return kSuccess;
  }

  auto letter = [](Zone z) {
    switch (z) {
      case Zone::LowDuty: return 'L';
      case Zone::Equilibrium: return 'E';
      case Zone::HighDuty: return 'H';
      case Zone::Unzoned: break;
    }
    return '.';
  };
  out << "rows: HI, columns: C_signal (H=high_duty L=low_duty E=equilibrium .=unzoned)\n";
  out << "     ";
  for (double c : axis) out << std::right << std::setw(5) << format_fixed(c, 2);
  out << '\n';
  for (double hi : axis) {
    out << format_fixed(hi, 2) << "  ";
    for (double c : axis) {
      const Zone z = classify_zone(hi, c);
      counts[z] += 1;
      out << "    " << letter(z);
    }
    out << '\n';
  }
  for (Zone z : kAllZones) out << zone_name(z) << '=' << counts[z] << ' ';
  out << '\n';
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Proportional duty evaluation, simulation and verification", "pduty"};
  app.require_subcommand(1);
  app.fallthrough(false);

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate one epistemic state");
  unit_option(eval_cmd, "--k", eval.k, "Knowledge magnitude K")->required();
  unit_option(eval_cmd, "--hi", eval.hi, "Humility index HI")->required();
  unit_option(eval_cmd, "--c", eval.c, "Contextual signal C_signal")->required();
  eval.signal.attach(eval_cmd);
  eval_cmd->add_option("--lambda", eval.lambda, "Baseline humility floor in [0, 1)")->capture_default_str();
  unit_option(eval_cmd, "--defer-threshold", eval.defer, "DEFER when D_total is below this")
      ->capture_default_str();
  eval_cmd->add_flag("--json", eval.json, "Also print the audit record as JSON");
  eval_cmd->add_option("--audit", eval.audit, "Append an audit record to this JSON Lines file");
  eval_cmd->add_option("--id", eval.id, "Scenario id recorded in the audit trail")->capture_default_str();
  eval_cmd->add_option("--fixed-time", eval.fixed_time, "Use this ISO-8601 UTC timestamp");

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Run seeded Monte Carlo trials");
  sim_cmd->add_option("--n", sim.n, "Number of trials")->check(CLI::PositiveNumber)->capture_default_str();
  sim_cmd->add_option("--seed", sim.seed, "64-bit seed")->capture_default_str();
  sim.signal.attach(sim_cmd);
  sim_cmd->add_option("--lambda", sim.lambda, "Baseline humility floor in [0, 1)")->capture_default_str();
  sim_cmd->add_option("--out", sim.out, "Output directory for trials.csv and summary.json")
      ->capture_default_str();
  sim_cmd->add_option("--workers", sim.workers, "Worker threads (0 = all cores)")->capture_default_str();

  ProtocolArgs proto;
  auto* proto_cmd = app.add_subcommand("protocol", "Run the three-form validation protocol");
  proto_cmd->add_option("--n", proto.n, "Trials per signal function")
      ->check(CLI::PositiveNumber)->capture_default_str();
  proto_cmd->add_option("--seed", proto.seed, "64-bit seed")->capture_default_str();
  proto_cmd->add_option("--lambda", proto.lambda, "Baseline humility floor")->capture_default_str();
  proto_cmd->add_option("--gain", proto.gain, "Exponential gain for the main run")->capture_default_str();
  proto_cmd->add_option("--out", proto.out, "Output directory")->capture_default_str();
  proto_cmd->add_option("--workers", proto.workers, "Worker threads (0 = all cores)")->capture_default_str();

  RankingArgs rank;
  auto* rank_cmd = app.add_subcommand("ranking", "Verify ranking preservation across humility");
  rank_cmd->add_option("--n", rank.n, "Number of scenarios")->check(CLI::PositiveNumber)->capture_default_str();
  rank_cmd->add_option("--seed", rank.seed, "64-bit seed")->capture_default_str();
  rank_cmd->add_option("--grid-step", rank.grid_step, "HI grid step over [0, 0.95]")
      ->check(CLI::Range(1e-6, 0.95))->capture_default_str();
  rank.signal.attach(rank_cmd);
  rank_cmd->add_option("--out", rank.out, "Output directory")->capture_default_str();
  rank_cmd->add_option("--check-trajectories", rank.check_trajectories,
                       "Re-verify an exported trajectory CSV instead of running the suite");
  rank_cmd->add_option("--workers", rank.workers, "Worker threads")->capture_default_str();

  BatchArgs batch;
  auto* batch_cmd = app.add_subcommand("batch", "Evaluate a batch of named scenarios");
  batch_cmd->add_option("file", batch.file, "JSON scenario batch");
  batch_cmd->add_flag("--paper-cases", batch.worked_cases, "Use the four built-in worked cases");
  batch_cmd->add_option("--audit", batch.audit, "Append audit records to this JSON Lines file");
  unit_option(batch_cmd, "--defer-threshold", batch.defer, "DEFER when D_total is below this")
      ->capture_default_str();
  batch_cmd->add_option("--format", batch.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))->capture_default_str();
  batch_cmd->add_option("--fixed-time", batch.fixed_time, "Use this ISO-8601 UTC timestamp");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep HI from 0 to 1 at fixed K and C_signal");
  unit_option(sweep_cmd, "--k", sweep.k, "Knowledge magnitude K")->required();
  unit_option(sweep_cmd, "--c", sweep.c, "Contextual signal C_signal")->required();
  sweep.signal.attach(sweep_cmd);
  sweep_cmd->add_option("--steps", sweep.steps, "Number of HI points (>= 2)")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}))->capture_default_str();
  unit_option(sweep_cmd, "--defer-threshold", sweep.defer, "DEFER when D_total is below this")
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out, "CSV path (stdout when omitted)");

  ZonesArgs zones;
  auto* zones_cmd = app.add_subcommand("zones", "Classify a grid of (HI, C_signal) points");
  zones_cmd->add_option("--step", zones.step, "Grid step over [0, 1]")->capture_default_str();
  zones_cmd->add_option("--format", zones.format, "Output format")
      ->check(CLI::IsMember({"table", "csv"}))->capture_default_str();

  std::vector<const char*> argv{"pduty"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kSuccess;
    const auto selected = app.get_subcommands();
    err << (selected.empty() ? app.help() : selected.front()->help());
    return kUsageError;
  }

  try {
    if (*eval_cmd) return cmd_eval(eval, out);
    if (*sim_cmd) return cmd_simulate(sim, out);
    if (*proto_cmd) return cmd_protocol(proto, out);
    if (*rank_cmd) return cmd_ranking(rank, out);
    if (*batch_cmd) return cmd_batch(batch, out);
    if (*sweep_cmd) return cmd_sweep(sweep, out);
    if (*zones_cmd) return cmd_zones(zones, out);
  } catch (const DomainError& e) {
    err << "error: " << flag_for(e.field()) << ": " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

int main(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace pduty::cli
