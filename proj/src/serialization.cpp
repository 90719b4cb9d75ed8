#include "pduty/serialization.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace pduty {

std::string format_double(double value) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::string format_fixed(double value, int decimals) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::fixed, decimals);
  return std::string(buf.data(), res.ptr);
}

nlohmann::json signal_to_json(const SignalFunction& sf) {
  struct Visitor {
    nlohmann::json operator()(const signal::Linear&) const { return {{"form", "linear"}}; }
    nlohmann::json operator()(const signal::Exponential& e) const {
      return {{"form", "exponential"}, {"gain", e.gain}};
    }
    nlohmann::json operator()(const signal::Logistic& l) const {
      return {{"form", "logistic"}, {"steepness", l.steepness}, {"midpoint", l.midpoint}};
    }
  };
  return std::visit(Visitor{}, sf.form());
}

SignalFunction signal_from_json(const nlohmann::json& j) {
  if (j.is_string()) return SignalFunction::from_name(j.get<std::string>());
  if (!j.is_object() || !j.contains("form")) {
    throw DomainError("g", "signal function must be an object with a \"form\" field");
  }
  const auto form = j.at("form").get<std::string>();
  if (form == "linear") return SignalFunction::linear();
  if (form == "exponential") {
    return SignalFunction::exponential(j.value("gain", signal::Exponential{}.gain));
  }
  if (form == "logistic") {
    const signal::Logistic d{};
    return SignalFunction::logistic(j.value("steepness", d.steepness),
                                    j.value("midpoint", d.midpoint));
  }
  return SignalFunction::from_name(form);
}

nlohmann::json inputs_to_json(const DutyInputs& in) {
  return {{"k", in.k()}, {"hi", in.hi()}, {"c_signal", in.c_signal()}};
}

DutyInputs inputs_from_json(const nlohmann::json& j) {
  return DutyInputs(j.at("k").get<double>(), j.at("hi").get<double>(),
                    j.at("c_signal").get<double>());
}

nlohmann::json breakdown_to_json(const DutyBreakdown& b) {
  return {{"action", b.action}, {"repair", b.repair}, {"total", b.total}};
}

DutyBreakdown breakdown_from_json(const nlohmann::json& j) {
  return DutyBreakdown{j.at("action").get<double>(), j.at("repair").get<double>(),
                       j.at("total").get<double>()};
}

}  // namespace pduty
