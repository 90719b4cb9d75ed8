#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "pduty/audit.hpp"
#include "pduty/decision.hpp"

using namespace pduty;
namespace fs = std::filesystem;

namespace {

AuditTime fixed_time() { return parse_timestamp("2025-03-01T12:00:00.250000Z"); }

const Scenario& case_by_id(const std::vector<Scenario>& cases, const std::string& id) {
  for (const auto& s : cases) {
    if (s.id == id) return s;
  }
  throw std::out_of_range(id);
}

class FailingSink final : public AuditSink {
 public:
  AuditAck append(const AuditRecord&) override { throw AuditWriteError("disk full"); }
};

AuditRecord random_record(std::mt19937_64& eng, std::size_t i) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  SignalFunction sf = SignalFunction::linear();
  switch (i % 3) {
    case 1: sf = SignalFunction::exponential(0.1 + 9.0 * u(eng)); break;
    case 2: sf = SignalFunction::logistic(1.0 + 19.0 * u(eng), u(eng)); break;
    default: break;
  }
  Scenario s{"rec-" + std::to_string(i), "", DutyInputs(u(eng), u(eng), u(eng)), sf,
             BaselineHumility(0.2 * u(eng))};
  MemoryAuditSink sink;
  const AuditTime t = fixed_time() + std::chrono::microseconds(static_cast<long>(eng() % 1000000000));
  return evaluate_scenario(s, PolicyThresholds(0.5 * u(eng)), sink, [t] { return t; }).record;
}

}  // namespace

TEST(Recommend, Examples) {
  const PolicyThresholds t;
  EXPECT_EQ(recommend({0.45, 0.18, 0.63}, t), Recommendation::Act);
  EXPECT_EQ(recommend({0.2, 0.3, 0.5}, t), Recommendation::Verify);
  EXPECT_EQ(recommend({0.25, 0.25, 0.5}, t), Recommendation::Verify);
  EXPECT_EQ(recommend({0.1, 0.05, 0.15}, t), Recommendation::Defer);
  EXPECT_EQ(recommend({0.1, 0.1, 0.2}, t), Recommendation::Verify);
  EXPECT_EQ(recommendation_name(Recommendation::Defer), "DEFER");
  EXPECT_EQ(recommendation_from_name("VERIFY"), Recommendation::Verify);
  EXPECT_THROW(recommendation_from_name("maybe"), std::invalid_argument);
  EXPECT_THROW(PolicyThresholds(-0.1), DomainError);
}

TEST(EvaluateScenario, WorkedCases) {
  const auto cases = worked_cases();
  ASSERT_EQ(cases.size(), 4u);
  MemoryAuditSink sink;
  const PolicyThresholds t;
  const auto av = evaluate_scenario(case_by_id(cases, "av-crosswalk"), t, sink, fixed_time);
  EXPECT_NEAR(av.breakdown.action, 0.49, 1e-12);
  EXPECT_NEAR(av.breakdown.repair, 0.168, 1e-12);
  EXPECT_EQ(av.recommendation, Recommendation::Act);
  const auto guard = evaluate_scenario(case_by_id(cases, "guardianship"), t, sink, fixed_time);
  EXPECT_NEAR(guard.breakdown.total, 0.68, 1e-12);
  EXPECT_EQ(guard.recommendation, Recommendation::Act);
  EXPECT_FALSE(guard.audit_error.has_value());
  EXPECT_EQ(sink.records().size(), 2u);
  EXPECT_EQ(sink.records()[1], guard.record);
}

TEST(EvaluateScenario, LowDutyDefers) {
  const Scenario s{"low", "", DutyInputs(0.05, 0.9, 0.1), SignalFunction::linear(),
                   BaselineHumility::none()};
  NullAuditSink sink;
  const auto out = evaluate_scenario(s, PolicyThresholds{}, sink, fixed_time);
  EXPECT_NEAR(out.breakdown.total, 0.0095, 1e-15);
  EXPECT_EQ(out.recommendation, Recommendation::Defer);
}

TEST(EvaluateScenario, SinkFailureKeepsRecord) {
  FailingSink sink;
  const auto out = evaluate_scenario(worked_cases()[0], PolicyThresholds{}, sink, fixed_time);
  ASSERT_TRUE(out.audit_error.has_value());
  EXPECT_NE(out.audit_error->find("disk full"), std::string::npos);
  EXPECT_EQ(out.record.scenario_id, "clinical-home-pass");
  EXPECT_EQ(out.record.breakdown, out.breakdown);
  EXPECT_EQ(reevaluate(out.record), out.breakdown);
}

TEST(Sweep, Endpoints) {
  const auto pts = humility_sweep(0.8, 0.0, SignalFunction::linear(), 11);
  ASSERT_EQ(pts.size(), 11u);
  EXPECT_EQ(pts.front().hi, 0.0);
  EXPECT_EQ(pts.back().hi, 1.0);
  EXPECT_NEAR(pts.front().breakdown.total, 0.8, 1e-15);
  EXPECT_NEAR(pts.back().breakdown.total, 0.0, 1e-15);

  const auto full = humility_sweep(0.8, 0.6, SignalFunction::linear(), 2);
  EXPECT_NEAR(full[0].breakdown.action, 0.8, 1e-15);
  EXPECT_NEAR(full[1].breakdown.repair, 0.48, 1e-15);
  EXPECT_NEAR(full[1].breakdown.action, 0.0, 1e-15);

  EXPECT_THROW(humility_sweep(0.8, 0.6, SignalFunction::linear(), 1), DomainError);
}

TEST(Sweep, ZeroKnowledgeIsFlat) {
  for (const auto& p : humility_sweep(0.0, 0.7, SignalFunction::logistic(), 21)) {
    EXPECT_EQ(p.breakdown, (DutyBreakdown{0, 0, 0}));
    EXPECT_EQ(p.recommendation, Recommendation::Defer);
  }
}

TEST(Sweep, MonotoneInHumility) {
  std::mt19937_64 eng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const double k = u(eng), c = u(eng);
    const auto sf = i % 2 ? SignalFunction::exponential(0.5 + 5 * u(eng)) : SignalFunction::linear();
    const auto pts = humility_sweep(k, c, sf, 11);
    for (std::size_t j = 1; j < pts.size(); ++j) {
      ASSERT_LE(pts[j].breakdown.action, pts[j - 1].breakdown.action);
      ASSERT_GE(pts[j].breakdown.repair, pts[j - 1].breakdown.repair);
    }
  }
}

TEST(Sweep, CrossoverMatchesBisection) {
  const auto sf = SignalFunction::linear();
  EXPECT_DOUBLE_EQ(crossover_humility(0.6, sf), 0.625);
  const double root = oracle::bisect(
      [&](double h) {
        const auto b = evaluate(DutyInputs(0.8, h, 0.6), sf, BaselineHumility::none());
        return b.action - b.repair;
      },
      0.0, 1.0);
  EXPECT_NEAR(root, 0.625, 1e-12);
  const auto exp = SignalFunction::exponential(2.0);
  EXPECT_NEAR(crossover_humility(0.3, exp), 1.0 / (1.0 + std::exp(2.0 * (0.3 - 1.0))), 1e-15);
}

TEST(Timestamp, RoundTrip) {
  const auto t = fixed_time();
  EXPECT_EQ(format_timestamp(t), "2025-03-01T12:00:00.250000Z");
  EXPECT_EQ(parse_timestamp(format_timestamp(t)), t);
  EXPECT_EQ(parse_timestamp("2025-03-01T12:00:00Z"), t - std::chrono::milliseconds(250));
  EXPECT_THROW(parse_timestamp("yesterday"), std::invalid_argument);
}

TEST(ConfigDigest, ChangesExactlyWithConfig) {
  const auto lin = SignalFunction::linear();
  const BaselineHumility b;
  const PolicyThresholds t;
  const auto d = config_digest(lin, b, t);
  EXPECT_EQ(d.size(), 64u);
  EXPECT_EQ(d, config_digest(SignalFunction::linear(), BaselineHumility(0.05), PolicyThresholds(0.2)));
  EXPECT_NE(d, config_digest(SignalFunction::exponential(1.0), b, t));
  EXPECT_NE(d, config_digest(lin, BaselineHumility(0.06), t));
  EXPECT_NE(d, config_digest(lin, b, PolicyThresholds(0.3)));
  EXPECT_NE(config_digest(SignalFunction::logistic(10, 0.5), b, t),
            config_digest(SignalFunction::logistic(10, 0.6), b, t));
}

TEST(AuditLog, RecordsRoundTripAndReevaluate) {
  std::mt19937_64 eng(1000);
  std::stringstream log;
  std::vector<AuditRecord> written;
  for (std::size_t i = 0; i < 1000; ++i) {
    written.push_back(random_record(eng, i));
    log << serialize_audit(written.back()) << '\n';
  }
  const auto back = read_audit_log(log);
  ASSERT_EQ(back.size(), written.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    ASSERT_EQ(back[i], written[i]) << i;
    const auto again = reevaluate(back[i]);
    ASSERT_NEAR(again.action, written[i].breakdown.action, 1e-12);
    ASSERT_NEAR(again.repair, written[i].breakdown.repair, 1e-12);
    ASSERT_NEAR(again.total, written[i].breakdown.total, 1e-12);
  }
}

TEST(AuditLog, TamperedConfigDetected) {
  std::mt19937_64 eng(3);
  auto r = random_record(eng, 0);
  auto j = audit_to_json(r);
  j["config"]["lambda"] = 0.5;
  EXPECT_THROW(reevaluate(audit_from_json(j)), std::runtime_error);
}

TEST(AuditLog, SerializedKeys) {
  std::mt19937_64 eng(4);
  const auto line = serialize_audit(random_record(eng, 1));
  EXPECT_EQ(line.find('\n'), std::string::npos);
  const auto j = nlohmann::json::parse(line);
  for (const char* key : {"timestamp", "scenario_id", "inputs", "breakdown", "recommendation",
                          "config", "config_digest"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(AuditLog, MalformedLineNamed) {
  std::mt19937_64 eng(5);
  std::stringstream log(serialize_audit(random_record(eng, 0)) + "\n{not json\n");
  try {
    read_audit_log(log);
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(JsonlSink, AppendsOneLinePerRecord) {
  const auto path = fs::temp_directory_path() / "pduty_audit_test.jsonl";
  fs::remove(path);
  {
    JsonlAuditSink sink(path);
    const auto cases = worked_cases();
    EXPECT_EQ(evaluate_scenario(cases[0], PolicyThresholds{}, sink, fixed_time).audit_error,
              std::nullopt);
    evaluate_scenario(cases[1], PolicyThresholds{}, sink, fixed_time);
  }
  {
    NullAuditSink discard;
    const auto record = evaluate_scenario(worked_cases()[2], PolicyThresholds{}, discard, fixed_time).record;
    JsonlAuditSink sink(path);
    EXPECT_EQ(sink.append(record).sequence, 1u);
  }
  std::ifstream is(path);
  const auto records = read_audit_log(is);
  ASSERT_EQ(records.size(), 3u);
  EXPECT_EQ(records[0].scenario_id, "clinical-home-pass");
  EXPECT_EQ(records[2].scenario_id, "market-2006");
}

TEST(JsonlSink, UnwritableTargetReported) {
  EXPECT_THROW(JsonlAuditSink(fs::path("/nonexistent_dir_pduty/audit.jsonl")), AuditWriteError);
  if (fs::exists("/dev/full")) {
    JsonlAuditSink sink("/dev/full");
    const auto out = evaluate_scenario(worked_cases()[0], PolicyThresholds{}, sink, fixed_time);
    EXPECT_TRUE(out.audit_error.has_value());
  }
}

TEST(ScenarioFile, ParsesDefaultsAndRoundTrips) {
  const auto s = parse_scenarios(R"([
    {"id": "a", "k": 0.5, "hi": 0.5, "c_signal": 0.5},
    {"id": "b", "label": "x", "k": 0.9, "hi": 0.1, "c_signal": 0.2,
     "g": {"form": "logistic", "steepness": 4, "midpoint": 0.3}, "lambda": 0}
  ])");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].signal_function, SignalFunction::linear());
  EXPECT_EQ(s[0].baseline.lambda(), 0.05);
  EXPECT_EQ(s[1].signal_function, SignalFunction::logistic(4, 0.3));
  EXPECT_EQ(s[1].baseline.lambda(), 0.0);
  const auto again = scenarios_from_json(scenarios_to_json(s));
  ASSERT_EQ(again.size(), 2u);
  EXPECT_EQ(again[1].inputs, s[1].inputs);
  EXPECT_EQ(again[1].signal_function, s[1].signal_function);
  EXPECT_TRUE(parse_scenarios("[]").empty());
}

TEST(ScenarioFile, Errors) {
  try {
    parse_scenarios("[\n  {\"id\": \"a\",\n   \"k\": }\n]");
    FAIL();
  } catch (const ScenarioFileError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_scenarios(R"({"id": "a"})"), ScenarioFileError);
  EXPECT_THROW(parse_scenarios(R"([{"id": "a", "k": 0.5, "hi": 0.5, "c_signal": 0.5},
                                   {"id": "a", "k": 0.5, "hi": 0.5, "c_signal": 0.5}])"),
               ScenarioFileError);
  EXPECT_THROW(parse_scenarios(R"([{"id": "", "k": 0.5, "hi": 0.5, "c_signal": 0.5}])"),
               ScenarioFileError);
  EXPECT_THROW(parse_scenarios(R"([{"id": "a", "k": 1.5, "hi": 0.5, "c_signal": 0.5}])"),
               ScenarioFileError);
  EXPECT_THROW(parse_scenarios(R"([{"id": "a", "hi": 0.5, "c_signal": 0.5}])"), ScenarioFileError);
}
