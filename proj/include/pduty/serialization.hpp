#pragma once

// Shared text and JSON encodings for the core duty types.

#include <string>
#include <string_view>

#include <json.hpp>

#include "pduty/duty.hpp"

namespace pduty {

/// Shortest round-trip is not used: machine formats always carry 17 significant digits.
std::string format_double(double value);

/// Parses a full-precision decimal (also "inf"/"nan"). Throws std::invalid_argument.
double parse_double(std::string_view text);

/// Fixed-point with `decimals` places, for human-readable tables.
std::string format_fixed(double value, int decimals = 3);

/// {"form": "linear"} | {"form": "exponential", "gain": g} |
/// {"form": "logistic", "steepness": s, "midpoint": m}
nlohmann::json signal_to_json(const SignalFunction& sf);

/// Missing shape parameters take their defaults. Throws DomainError on bad values.
SignalFunction signal_from_json(const nlohmann::json& j);

nlohmann::json inputs_to_json(const DutyInputs& in);
DutyInputs inputs_from_json(const nlohmann::json& j);

nlohmann::json breakdown_to_json(const DutyBreakdown& b);
DutyBreakdown breakdown_from_json(const nlohmann::json& j);

}  // namespace pduty
