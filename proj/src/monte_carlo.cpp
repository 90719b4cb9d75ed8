#include "pduty/monte_carlo.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <string>

#include "parallel.hpp"
#include "pduty/rng.hpp"
#include "pduty/serialization.hpp"

namespace pduty {

namespace {

std::size_t block_count(std::size_t n) { return (n + kSummaryBlock - 1) / kSummaryBlock; }

}  // namespace

void SimulationConfig::validate() const {
  if (n_trials == 0) throw std::invalid_argument("n_trials must be at least 1");
}

unsigned resolve_workers(unsigned workers) noexcept {
  if (workers != 0) return workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

void SummaryAccumulator::add(const TrialRecord& t) noexcept {
  k_total_.add(t.inputs.k(), t.breakdown.total);
  action_.add(t.breakdown.action);
  repair_.add(t.breakdown.repair);
  max_residual_ = std::max(max_residual_, conservation_residual(t.breakdown));
  zones_[classify_zone(t.inputs.hi(), t.inputs.c_signal())] += 1;
}

void SummaryAccumulator::merge(const SummaryAccumulator& other) noexcept {
  k_total_.merge(other.k_total_);
  action_.merge(other.action_);
  repair_.merge(other.repair_);
  max_residual_ = std::max(max_residual_, other.max_residual_);
  zones_.merge(other.zones_);
}

SimulationSummary SummaryAccumulator::finish() const {
  SimulationSummary s;
  s.n = k_total_.count();
  s.mean_total = k_total_.mean_y();
  s.var_total = k_total_.variance_y();
  s.mean_action = action_.mean();
  s.mean_repair = repair_.mean();
  s.pearson_k_total = k_total_.correlation();
  s.max_conservation_residual = max_residual_;
  s.zone_counts = zones_;
  return s;
}

TrialRecord sample_trial(const SimulationConfig& config, std::uint64_t index) {
  const CounterRng rng(config.seed);
  const DutyInputs inputs(rng.uniform(index, 0), rng.uniform(index, 1), rng.uniform(index, 2));
  return TrialRecord{index, inputs, evaluate(inputs, config.signal_function, config.baseline)};
}

std::vector<TrialRecord> sample_trials(const SimulationConfig& config, unsigned workers) {
  config.validate();
  std::vector<TrialRecord> out(config.n_trials);
  const std::size_t blocks = block_count(config.n_trials);
  detail::parallel_for(blocks, resolve_workers(workers), [&](std::size_t b) {
    const std::size_t end = std::min(config.n_trials, (b + 1) * kSummaryBlock);
    for (std::size_t i = b * kSummaryBlock; i < end; ++i) out[i] = sample_trial(config, i);
  });
  return out;
}

SimulationSummary summarize(std::span<const TrialRecord> trials) {
  if (trials.empty()) throw std::invalid_argument("summarize: empty trial stream");
  SummaryAccumulator total;
  for (std::size_t start = 0; start < trials.size(); start += kSummaryBlock) {
    SummaryAccumulator block;
    for (const auto& t : trials.subspan(start, std::min(kSummaryBlock, trials.size() - start))) {
      block.add(t);
    }
    total.merge(block);
  }
  return total.finish();
}

SimulationSummary simulate(const SimulationConfig& config, unsigned workers) {
  config.validate();
  std::vector<SummaryAccumulator> blocks(block_count(config.n_trials));
  detail::parallel_for(blocks.size(), resolve_workers(workers), [&](std::size_t b) {
    const std::size_t end = std::min(config.n_trials, (b + 1) * kSummaryBlock);
    for (std::size_t i = b * kSummaryBlock; i < end; ++i) blocks[b].add(sample_trial(config, i));
  });
  SummaryAccumulator total;
  for (const auto& b : blocks) total.merge(b);
  return total.finish();
}

double first_difference_variance(const SimulationConfig& config, unsigned workers) {
  config.validate();
  std::vector<RunningMoments> blocks(block_count(config.n_trials));
  detail::parallel_for(blocks.size(), resolve_workers(workers), [&](std::size_t b) {
    const std::size_t start = b * kSummaryBlock;
    const std::size_t end = std::min(config.n_trials, start + kSummaryBlock);
    double prev = start == 0 ? 0.0 : sample_trial(config, start - 1).breakdown.total;
    for (std::size_t i = start; i < end; ++i) {
      const double cur = sample_trial(config, i).breakdown.total;
      if (i > 0) blocks[b].add(cur - prev);
      prev = cur;
    }
  });
  RunningMoments total;
  for (const auto& b : blocks) total.merge(b);
  return total.variance();
}

StabilityReport stability_comparison(const SimulationConfig& config_on,
                                     const SimulationConfig& config_off, unsigned workers) {
  if (config_on.n_trials != config_off.n_trials || config_on.seed != config_off.seed ||
      !(config_on.signal_function == config_off.signal_function)) {
    throw std::invalid_argument(
        "stability_comparison: configs must differ only in baseline humility");
  }
  const auto on = simulate(config_on, workers);
  const auto off = simulate(config_off, workers);

  auto safe_ratio = [](double a, double b) {
    if (a == b) return 1.0;
    return a / b;
  };

  StabilityReport r;
  r.lambda_on = config_on.baseline.lambda();
  r.lambda_off = config_off.baseline.lambda();
  r.var_on = on.var_total;
  r.var_off = off.var_total;
  r.ratio = safe_ratio(r.var_on, r.var_off);
  r.diff_var_on = first_difference_variance(config_on, workers);
  r.diff_var_off = first_difference_variance(config_off, workers);
  r.diff_ratio = safe_ratio(r.diff_var_on, r.diff_var_off);
  r.mean_total_on = on.mean_total;
  r.mean_total_off = off.mean_total;
  return r;
}

// --- CSV / JSON --------------------------------------------------------------

namespace {

void append_row(std::string& line, const TrialRecord& t) {
  line.clear();
  line += std::to_string(t.index);
  for (double v : {t.inputs.k(), t.inputs.hi(), t.inputs.c_signal(), t.breakdown.action,
                   t.breakdown.repair, t.breakdown.total}) {
    line += ',';
    line += format_double(v);
  }
  line += '\n';
}

}  // namespace

void write_trials_csv(std::ostream& os, std::span<const TrialRecord> trials) {
  os << kTrialCsvHeader << '\n';
  std::string line;
  for (const auto& t : trials) {
    append_row(line, t);
    os.write(line.data(), static_cast<std::streamsize>(line.size()));
  }
}

void write_trials_csv(std::ostream& os, const SimulationConfig& config) {
  config.validate();
  os << kTrialCsvHeader << '\n';
  std::string line;
  for (std::size_t i = 0; i < config.n_trials; ++i) {
    append_row(line, sample_trial(config, i));
    os.write(line.data(), static_cast<std::streamsize>(line.size()));
  }
}

std::vector<TrialRecord> read_trials_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kTrialCsvHeader) {
    throw std::runtime_error("trial CSV: missing or unexpected header");
  }
  std::vector<TrialRecord> out;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::string_view rest(line);
    for (;;) {
      const auto comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    try {
      if (fields.size() != 7) throw std::invalid_argument("expected 7 fields");
      std::uint64_t index = 0;
      const auto res = std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), index);
      if (res.ec != std::errc{} || res.ptr != fields[0].data() + fields[0].size()) {
        throw std::invalid_argument("bad trial index");
      }
      out.push_back(TrialRecord{
          index,
          DutyInputs(parse_double(fields[1]), parse_double(fields[2]), parse_double(fields[3])),
          DutyBreakdown{parse_double(fields[4]), parse_double(fields[5]), parse_double(fields[6])}});
    } catch (const std::exception& e) {
      throw std::runtime_error("trial CSV line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

nlohmann::json summary_to_json(const SimulationSummary& s, const SimulationConfig& config) {
  nlohmann::json zones = nlohmann::json::object();
  for (Zone z : kAllZones) zones[std::string(zone_name(z))] = s.zone_counts[z];
  nlohmann::json j;
  j["n"] = s.n;
  j["seed"] = config.seed;
  j["g_form"] = std::string(config.signal_function.name());
  j["g"] = signal_to_json(config.signal_function);
  j["lambda"] = config.baseline.lambda();
  j["mean_total"] = s.mean_total;
  j["var_total"] = s.var_total;
  j["mean_action"] = s.mean_action;
  j["mean_repair"] = s.mean_repair;
  j["pearson_k_total"] = s.pearson_k_total ? nlohmann::json(*s.pearson_k_total) : nlohmann::json();
  j["max_conservation_residual"] = s.max_conservation_residual;
  j["zone_counts"] = zones;
  return j;
}

}  // namespace pduty
