#pragma once

/**
 * @file decision.hpp
 * @brief Scenario evaluation, ACT / VERIFY / DEFER policy and humility sweeps.
 */

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pduty/duty.hpp"

namespace pduty {

enum class Recommendation { Act, Verify, Defer };

/// "ACT", "VERIFY", "DEFER"
std::string_view recommendation_name(Recommendation r) noexcept;
Recommendation recommendation_from_name(std::string_view name);

class PolicyThresholds {
 public:
  static constexpr double kDefaultDeferBelow = 0.2;

  explicit PolicyThresholds(double defer_below = kDefaultDeferBelow);
  double defer_below() const noexcept { return defer_below_; }

  friend bool operator==(const PolicyThresholds&, const PolicyThresholds&) = default;

 private:
  double defer_below_;
};

struct Scenario {
  std::string id;
  std::string label;
  DutyInputs inputs;
  SignalFunction signal_function{};
  BaselineHumility baseline{};
};

/// Defer if total < defer_below; else Act if action > repair; else Verify.
Recommendation recommend(const DutyBreakdown& b, const PolicyThresholds& t) noexcept;

/// Humility at which action and repair are equal: 1 / (1 + g(c)).
double crossover_humility(double c_signal, const SignalFunction& sf);

struct SweepPoint {
  double hi = 0.0;
  DutyBreakdown breakdown;
  Recommendation recommendation = Recommendation::Verify;
};

/// Evaluates hi = i / (steps - 1) for i in [0, steps) with the baseline floor off.
/// Throws DomainError when steps < 2.
std::vector<SweepPoint> humility_sweep(double k, double c_signal, const SignalFunction& sf,
                                       std::size_t steps,
                                       const PolicyThresholds& thresholds = PolicyThresholds{});

/// The four worked examples (clinical, guardianship, market, vehicle) with linear g and
/// no baseline floor.
std::vector<Scenario> worked_cases();

/// Thrown for malformed scenario batches; the message carries line/column for parse errors.
class ScenarioFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// JSON array of {id, label, k, hi, c_signal, g, lambda}. `g` and `lambda` are optional
/// (linear, 0.05). Ids must be non-empty and unique.
std::vector<Scenario> scenarios_from_json(const nlohmann::json& j);
std::vector<Scenario> parse_scenarios(std::string_view text);
nlohmann::json scenarios_to_json(const std::vector<Scenario>& scenarios);

}  // namespace pduty
