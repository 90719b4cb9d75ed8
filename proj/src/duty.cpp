#include "pduty/duty.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pduty {

namespace {

std::string range_message(std::string_view field, double value, std::string_view range) {
  std::ostringstream os;
  os << field << " must lie in " << range << ", got " << value;
  return os.str();
}

double require_positive(std::string_view field, double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(field), range_message(field, value, "(0, inf)"));
  }
  return value;
}

}  // namespace

double require_unit(std::string_view field, double value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw DomainError(std::string(field), range_message(field, value, "[0, 1]"));
  }
  return value;
}

DutyInputs::DutyInputs(double k, double hi, double c_signal)
    : k_(require_unit("k", k)),
      hi_(require_unit("hi", hi)),
      c_signal_(require_unit("c_signal", c_signal)) {}

SignalFunction::SignalFunction(Form form) : form_(form) {
  if (const auto* e = std::get_if<signal::Exponential>(&form_)) {
    require_positive("gain", e->gain);
  } else if (const auto* l = std::get_if<signal::Logistic>(&form_)) {
    require_positive("steepness", l->steepness);
    require_unit("midpoint", l->midpoint);
  }
}

SignalFunction SignalFunction::exponential(double gain) {
  return SignalFunction{signal::Exponential{gain}};
}

SignalFunction SignalFunction::logistic(double steepness, double midpoint) {
  return SignalFunction{signal::Logistic{steepness, midpoint}};
}

SignalFunction SignalFunction::from_name(std::string_view name) {
  if (name == "linear") return linear();
  if (name == "exponential") return exponential();
  if (name == "logistic") return logistic();
  throw DomainError("g", "unknown signal function '" + std::string(name) +
                             "' (expected linear, exponential or logistic)");
}

std::string_view SignalFunction::name() const noexcept {
  switch (form_.index()) {
    case 1: return "exponential";
    case 2: return "logistic";
    default: return "linear";
  }
}

double SignalFunction::operator()(double x) const noexcept {
  struct Visitor {
    double x;
    double operator()(const signal::Linear&) const { return x; }
    double operator()(const signal::Exponential& e) const { return std::exp(e.gain * (x - 1.0)); }
    double operator()(const signal::Logistic& l) const {
      return 1.0 / (1.0 + std::exp(-l.steepness * (x - l.midpoint)));
    }
  };
  return std::visit(Visitor{x}, form_);
}

BaselineHumility::BaselineHumility(double lambda) : lambda_(lambda) {
  if (!(lambda >= 0.0 && lambda < 1.0)) {
    throw DomainError("lambda", range_message("lambda", lambda, "[0, 1)"));
  }
}

double eval_signal(const SignalFunction& sf, double x) {
  return sf(require_unit("x", x));
}

double effective_humility(double hi, const BaselineHumility& baseline) {
  return std::max(require_unit("hi", hi), baseline.lambda());
}

DutyBreakdown evaluate(const DutyInputs& inputs, const SignalFunction& sf,
                       const BaselineHumility& baseline) {
  const double hi = std::max(inputs.hi(), baseline.lambda());
  DutyBreakdown b;
  b.action = inputs.k() * (1.0 - hi);
  b.repair = inputs.k() * hi * sf(inputs.c_signal());
  b.total = b.action + b.repair;
  return b;
}

double conservation_residual(const DutyBreakdown& b) noexcept {
  return std::abs(b.action + b.repair - b.total);
}

}  // namespace pduty
