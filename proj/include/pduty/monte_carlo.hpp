#pragma once

/**
 * @file monte_carlo.hpp
 * @brief Seeded Monte Carlo trials over uniform (K, HI, C_signal) and their summaries.
 *
 * Trial i draws its three coordinates from CounterRng(seed) at counter i,
 * lanes 0..2, so the stream is a pure function of (seed, i). Summaries are
 * accumulated over fixed blocks of kSummaryBlock trials and merged in block
 * order; the result does not depend on how many workers computed the blocks.
 */

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "pduty/duty.hpp"
#include "pduty/statistics.hpp"
#include "pduty/zones.hpp"

namespace pduty {

inline constexpr std::size_t kSummaryBlock = 4096;

struct SimulationConfig {
  std::size_t n_trials = 100000;
  std::uint64_t seed = 42;
  SignalFunction signal_function{};
  BaselineHumility baseline{};

  /// Throws std::invalid_argument when n_trials == 0.
  void validate() const;

  friend bool operator==(const SimulationConfig&, const SimulationConfig&) = default;
};

struct TrialRecord {
  std::uint64_t index = 0;
  DutyInputs inputs{0.0, 0.0, 0.0};
  DutyBreakdown breakdown{};

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct SimulationSummary {
  std::size_t n = 0;
  double mean_total = 0.0;
  double var_total = 0.0;
  double mean_action = 0.0;
  double mean_repair = 0.0;
  std::optional<double> pearson_k_total;  // absent when undefined (n < 2 or constant)
  double max_conservation_residual = 0.0;
  ZoneCounts zone_counts{};

  friend bool operator==(const SimulationSummary&, const SimulationSummary&) = default;
};

class SummaryAccumulator {
 public:
  void add(const TrialRecord& t) noexcept;
  void merge(const SummaryAccumulator& other) noexcept;
  std::size_t count() const noexcept { return k_total_.count(); }
  SimulationSummary finish() const;

 private:
  RunningCovariance k_total_;  // (K, D_total)
  RunningMoments action_;
  RunningMoments repair_;
  double max_residual_ = 0.0;
  ZoneCounts zones_{};
};

/// 0 means "use hardware concurrency".
unsigned resolve_workers(unsigned workers) noexcept;

TrialRecord sample_trial(const SimulationConfig& config, std::uint64_t index);

std::vector<TrialRecord> sample_trials(const SimulationConfig& config, unsigned workers = 1);

/// Throws std::invalid_argument on an empty range.
SimulationSummary summarize(std::span<const TrialRecord> trials);

/// Equivalent to summarize(sample_trials(config)) without materializing trials.
SimulationSummary simulate(const SimulationConfig& config, unsigned workers = 1);

/// Sample variance of D_total(i) - D_total(i - 1) over the trial sequence.
double first_difference_variance(const SimulationConfig& config, unsigned workers = 1);

struct StabilityReport {
  static constexpr double kClaimedReduction = 0.72;
  static constexpr std::string_view kVarianceDefinition =
      "unbiased (n-1) sample variance of D_total over i.i.d. trials";
  static constexpr std::string_view kSecondaryDefinition =
      "unbiased (n-1) sample variance of first differences D_total[i] - D_total[i-1]";

  double lambda_on = 0.0;
  double lambda_off = 0.0;
  double var_on = 0.0;
  double var_off = 0.0;
  double ratio = 1.0;  // var_on / var_off
  double diff_var_on = 0.0;
  double diff_var_off = 0.0;
  double diff_ratio = 1.0;
  double mean_total_on = 0.0;
  double mean_total_off = 0.0;

  double measured_reduction() const noexcept { return 1.0 - ratio; }
};

/// Configs must agree on everything but the baseline. Throws std::invalid_argument otherwise.
StabilityReport stability_comparison(const SimulationConfig& config_on,
                                     const SimulationConfig& config_off, unsigned workers = 1);

// --- protocol ---------------------------------------------------------------

struct DivergenceRow {
  std::string claim;
  double claimed_value = 0.0;
  double measured = 0.0;
  bool reproduced = false;
  std::string note;
};

struct ProtocolRun {
  SimulationConfig config;
  SimulationSummary summary;
};

struct ProtocolOptions {
  std::vector<double> exponential_gains{1.0, 2.0, 5.0};
  unsigned workers = 1;
  std::optional<std::filesystem::path> output_dir;
};

struct ProtocolReport {
  std::vector<ProtocolRun> runs;  // linear, exponential, logistic
  double max_conservation_residual = 0.0;
  StabilityReport stability;
  std::vector<std::pair<double, double>> exponential_gain_means;  // (gain, mean_total)
  std::vector<DivergenceRow> divergences;
  std::vector<std::filesystem::path> written_files;
};

/// Linear, exponential(gain = 1) and logistic(10, 0.5) at a shared seed and baseline.
std::vector<SimulationConfig> default_protocol_configs(std::uint64_t seed = 42,
                                                       std::size_t n_trials = 100000,
                                                       double lambda = BaselineHumility::kDefault);

/// `configs` must be exactly one linear, one exponential and one logistic config, in
/// that order. Writes per-form CSV/JSON and the report when options.output_dir is set;
/// I/O failures throw IoError naming the path.
ProtocolReport run_protocol(const std::vector<SimulationConfig>& configs,
                            const ProtocolOptions& options = {});

// --- I/O -------------------------------------------------------------------

class IoError : public std::runtime_error {
 public:
  IoError(std::filesystem::path path, const std::string& what)
      : std::runtime_error(what + ": " + path.string()), path_(std::move(path)) {}
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
};

inline constexpr std::string_view kTrialCsvHeader = "trial,k,hi,c_signal,d_action,d_repair,d_total";

void write_trials_csv(std::ostream& os, std::span<const TrialRecord> trials);
/// Streams trials straight from the generator.
void write_trials_csv(std::ostream& os, const SimulationConfig& config);
/// Throws std::runtime_error naming the line on malformed input.
std::vector<TrialRecord> read_trials_csv(std::istream& is);

nlohmann::json summary_to_json(const SimulationSummary& s, const SimulationConfig& config);
nlohmann::json protocol_report_to_json(const ProtocolReport& r);

}  // namespace pduty
