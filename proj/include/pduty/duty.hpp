#pragma once

/**
 * @file duty.hpp
 * @brief Proportional duty evaluation: epistemic state in, action/repair split out.
 *
 * Total duty is K * [(1 - HI) + HI * g(C)], split into an action share
 * K * (1 - HI) and a repair share K * HI * g(C). The total is always formed
 * as the sum of the two shares so the split is conserved exactly.
 */

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace pduty {

/// Thrown when a scalar falls outside the domain its role requires.
class DomainError : public std::domain_error {
 public:
  DomainError(std::string field, const std::string& what)
      : std::domain_error(what), field_(std::move(field)) {}

  /// Name of the offending quantity ("k", "hi", "gain", ...).
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Throws DomainError unless 0 <= value <= 1 (NaN rejected).
double require_unit(std::string_view field, double value);

/// Epistemic state (K, HI, C_signal), each on [0, 1].
class DutyInputs {
 public:
  DutyInputs(double k, double hi, double c_signal);

  double k() const noexcept { return k_; }
  double hi() const noexcept { return hi_; }
  double c_signal() const noexcept { return c_signal_; }

  friend bool operator==(const DutyInputs&, const DutyInputs&) = default;

 private:
  double k_;
  double hi_;
  double c_signal_;
};

namespace signal {

struct Linear {
  friend bool operator==(const Linear&, const Linear&) = default;
};

/// g(x) = exp(gain * (x - 1)); g(1) = 1.
struct Exponential {
  double gain = 1.0;
  friend bool operator==(const Exponential&, const Exponential&) = default;
};

/// g(x) = 1 / (1 + exp(-steepness * (x - midpoint))).
struct Logistic {
  double steepness = 10.0;
  double midpoint = 0.5;
  friend bool operator==(const Logistic&, const Logistic&) = default;
};

}  // namespace signal

/// Contextual signal mapping g. Shape parameters are validated on construction.
class SignalFunction {
 public:
  using Form = std::variant<signal::Linear, signal::Exponential, signal::Logistic>;

  SignalFunction() = default;  // linear
  explicit SignalFunction(Form form);

  static SignalFunction linear() { return SignalFunction{}; }
  static SignalFunction exponential(double gain = 1.0);
  static SignalFunction logistic(double steepness = 10.0, double midpoint = 0.5);

  /// Parses "linear" / "exponential" / "logistic" with default shape parameters.
  static SignalFunction from_name(std::string_view name);

  const Form& form() const noexcept { return form_; }
  std::string_view name() const noexcept;

  /// g(x) for x already known to lie on [0, 1].
  double operator()(double x) const noexcept;

  friend bool operator==(const SignalFunction&, const SignalFunction&) = default;

 private:
  Form form_{signal::Linear{}};
};

/// Floor applied to HI before evaluation. Zero disables it.
class BaselineHumility {
 public:
  static constexpr double kDefault = 0.05;

  explicit BaselineHumility(double lambda = kDefault);
  static BaselineHumility none() { return BaselineHumility{0.0}; }

  double lambda() const noexcept { return lambda_; }

  friend bool operator==(const BaselineHumility&, const BaselineHumility&) = default;

 private:
  double lambda_;
};

struct DutyBreakdown {
  double action = 0.0;
  double repair = 0.0;
  double total = 0.0;

  friend bool operator==(const DutyBreakdown&, const DutyBreakdown&) = default;
};

/// g(x); rejects x outside [0, 1].
double eval_signal(const SignalFunction& sf, double x);

/// max(hi, lambda).
double effective_humility(double hi, const BaselineHumility& baseline);

DutyBreakdown evaluate(const DutyInputs& inputs, const SignalFunction& sf,
                       const BaselineHumility& baseline);

/// |action + repair - total|
double conservation_residual(const DutyBreakdown& b) noexcept;

}  // namespace pduty
