#pragma once

/**
 * @file ranking.hpp
 * @brief Ranking preservation of strictly K-ordered options across a humility grid.
 *
 * Every option in a scenario shares HI and C_signal, so each duty term scales
 * linearly in K and the K ordering carries over to both action and repair.
 * Checks run with the baseline floor disabled so HI = 0 is evaluated as given.
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pduty/duty.hpp"

namespace pduty {

/// Minimum gap between consecutive K values in a scenario.
inline constexpr double kRankingGap = 1e-6;
inline constexpr double kRankingGridMax = 0.95;

class RankingScenario {
 public:
  /// Throws DomainError unless k[0] - k[1] >= kRankingGap and k[1] - k[2] >= kRankingGap.
  RankingScenario(std::array<double, 3> k, double c_signal,
                  SignalFunction sf = SignalFunction::linear());

  const std::array<double, 3>& k() const noexcept { return k_; }
  double c_signal() const noexcept { return c_signal_; }
  const SignalFunction& signal_function() const noexcept { return sf_; }

  friend bool operator==(const RankingScenario&, const RankingScenario&) = default;

 private:
  std::array<double, 3> k_;
  double c_signal_;
  SignalFunction sf_;
};

/// The three-option example (0.80, 0.50, 0.10) at C_signal = 0.6, linear g.
RankingScenario reference_scenario();

/// 0, step, 2*step, ..., max (inclusive, clamped to max).
std::vector<double> hi_grid(double step = 0.05, double max = kRankingGridMax);

std::vector<RankingScenario> generate_scenarios(std::size_t n, std::uint64_t seed,
                                                const SignalFunction& sf = SignalFunction::linear());

struct RankingPoint {
  double hi = 0.0;
  std::array<DutyBreakdown, 3> duties{};
  bool preserved = true;
};

struct RankingCheck {
  bool preserved = true;
  std::vector<RankingPoint> points;
  std::optional<double> first_violation_hi;
};

/// Action must be strictly ordered and repair non-strictly ordered at every grid point.
/// Throws DomainError for an empty grid or a point outside [0, 0.95].
RankingCheck check_ranking(const RankingScenario& s, std::span<const double> grid);

struct RankingViolation {
  std::size_t scenario = 0;
  double hi = 0.0;
  friend bool operator==(const RankingViolation&, const RankingViolation&) = default;
};

struct RankingReport {
  std::size_t n_scenarios = 0;
  std::size_t preserved_count = 0;
  std::vector<double> hi_grid;
  std::optional<RankingViolation> first_violation;

  bool all_preserved() const noexcept { return preserved_count == n_scenarios; }
};

RankingReport check_scenarios(std::span<const RankingScenario> scenarios,
                              std::span<const double> grid, unsigned workers = 1);

RankingReport run_ranking_suite(std::size_t n, std::uint64_t seed, std::span<const double> grid,
                                const SignalFunction& sf = SignalFunction::linear(),
                                unsigned workers = 1);

nlohmann::json ranking_report_to_json(const RankingReport& r);

// --- trajectory export (hi, option, k, d_action, d_repair, ratio) -----------

inline constexpr std::string_view kTrajectoryCsvHeader = "hi,option,k,d_action,d_repair,ratio";

struct TrajectoryRow {
  double hi = 0.0;
  int option = 0;  // 1-based, in descending K order
  double k = 0.0;
  double d_action = 0.0;
  double d_repair = 0.0;
  double ratio = 0.0;  // d_action / d_repair; inf when repair is zero
};

std::vector<TrajectoryRow> trajectory_rows(const RankingScenario& s, const RankingCheck& check);
void write_trajectory_csv(std::ostream& os, std::span<const TrajectoryRow> rows);
std::vector<TrajectoryRow> read_trajectory_csv(std::istream& is);

struct TrajectoryVerdict {
  bool preserved = true;
  std::optional<double> first_violation_hi;
  std::optional<int> first_violation_option;  // the option that broke the ordering
};

/// Re-checks an exported trajectory table: at each hi, options sorted by descending K
/// must show strictly descending action and non-increasing repair.
TrajectoryVerdict verify_trajectories(std::span<const TrajectoryRow> rows);

}  // namespace pduty
