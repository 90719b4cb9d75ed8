#include "pduty/decision.hpp"

#include <set>
#include <sstream>

#include "pduty/serialization.hpp"

namespace pduty {

std::string_view recommendation_name(Recommendation r) noexcept {
  switch (r) {
    case Recommendation::Act: return "ACT";
    case Recommendation::Verify: return "VERIFY";
    case Recommendation::Defer: break;
  }
  return "DEFER";
}

Recommendation recommendation_from_name(std::string_view name) {
  if (name == "ACT") return Recommendation::Act;
  if (name == "VERIFY") return Recommendation::Verify;
  if (name == "DEFER") return Recommendation::Defer;
  throw std::invalid_argument("unknown recommendation '" + std::string(name) + "'");
}

PolicyThresholds::PolicyThresholds(double defer_below)
    : defer_below_(require_unit("defer_below", defer_below)) {}

Recommendation recommend(const DutyBreakdown& b, const PolicyThresholds& t) noexcept {
  if (b.total < t.defer_below()) return Recommendation::Defer;
  if (b.action > b.repair) return Recommendation::Act;
  return Recommendation::Verify;
}

double crossover_humility(double c_signal, const SignalFunction& sf) {
  return 1.0 / (1.0 + eval_signal(sf, c_signal));
}

std::vector<SweepPoint> humility_sweep(double k, double c_signal, const SignalFunction& sf,
                                       std::size_t steps, const PolicyThresholds& thresholds) {
  if (steps < 2) throw DomainError("steps", "a humility sweep needs at least 2 steps");
  const auto baseline = BaselineHumility::none();
  std::vector<SweepPoint> out;
  out.reserve(steps);
  const double last = static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) {
    const double hi = static_cast<double>(i) / last;
    const auto b = evaluate(DutyInputs(k, hi, c_signal), sf, baseline);
    out.push_back(SweepPoint{hi, b, recommend(b, thresholds)});
  }
  return out;
}

std::vector<Scenario> worked_cases() {
  const auto linear = SignalFunction::linear();
  const auto none = BaselineHumility::none();
  return {
      {"clinical-home-pass", "Clinical ethics: weekend home pass", DutyInputs(0.75, 0.40, 0.60),
       linear, none},
      {"guardianship", "Recipient rights: guardianship and medication monitoring",
       DutyInputs(0.80, 0.50, 0.70), linear, none},
      {"market-2006", "Economic governance: pre-crisis institutional configuration",
       DutyInputs(0.90, 0.10, 0.40), linear, none},
      {"av-crosswalk", "Autonomous vehicle: crosswalk at dusk", DutyInputs(0.70, 0.30, 0.80),
       linear, none},
  };
}

std::vector<Scenario> scenarios_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ScenarioFileError("scenario batch must be a JSON array");
  std::vector<Scenario> out;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& e = j[i];
    try {
      if (!e.is_object()) throw ScenarioFileError("entry is not an object");
      Scenario s{e.at("id").get<std::string>(), e.value("label", std::string{}),
                 inputs_from_json(e),
                 e.contains("g") ? signal_from_json(e.at("g")) : SignalFunction::linear(),
                 BaselineHumility(e.value("lambda", BaselineHumility::kDefault))};
      if (s.id.empty()) throw ScenarioFileError("id must not be empty");
      if (!ids.insert(s.id).second) throw ScenarioFileError("duplicate id '" + s.id + "'");
      out.push_back(std::move(s));
    } catch (const std::exception& ex) {
      throw ScenarioFileError("scenario " + std::to_string(i) + ": " + ex.what());
    }
  }
  return out;
}

std::vector<Scenario> parse_scenarios(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Position is a byte offset; recover line and column for the message.
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::ostringstream os;
    os << "malformed JSON at line " << line << ", column " << column << " (byte " << e.byte
       << "): " << e.what();
    throw ScenarioFileError(os.str());
  }
  return scenarios_from_json(j);
}

nlohmann::json scenarios_to_json(const std::vector<Scenario>& scenarios) {
  auto arr = nlohmann::json::array();
  for (const auto& s : scenarios) {
    arr.push_back({{"id", s.id},
                   {"label", s.label},
                   {"k", s.inputs.k()},
                   {"hi", s.inputs.hi()},
                   {"c_signal", s.inputs.c_signal()},
                   {"g", signal_to_json(s.signal_function)},
                   {"lambda", s.baseline.lambda()}});
  }
  return arr;
}

}  // namespace pduty
