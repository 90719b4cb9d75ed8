#pragma once

/**
 * @file audit.hpp
 * @brief Append-only decision trace, one JSON object per line.
 *
 * Each record carries the inputs, the resulting duties and recommendation, the
 * evaluation config, and a SHA-256 digest of that config so a reviewer can
 * re-derive the breakdown and detect config tampering.
 */

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pduty/decision.hpp"
#include "pduty/duty.hpp"

namespace pduty {

using AuditTime = std::chrono::sys_time<std::chrono::microseconds>;
using AuditClock = std::function<AuditTime()>;

AuditTime audit_now();

/// ISO-8601 UTC with microseconds, e.g. "2025-01-01T00:00:00.000000Z".
std::string format_timestamp(AuditTime t);
/// Accepts "YYYY-MM-DDTHH:MM:SS[.ffffff]Z". Throws std::invalid_argument.
AuditTime parse_timestamp(std::string_view text);

/// Hex SHA-256 of the canonical JSON encoding of (g, lambda, defer_below).
std::string config_digest(const SignalFunction& sf, const BaselineHumility& baseline,
                          const PolicyThresholds& thresholds);

struct AuditRecord {
  AuditTime timestamp{};
  std::string scenario_id;
  DutyInputs inputs{0.0, 0.0, 0.0};
  DutyBreakdown breakdown{};
  Recommendation recommendation = Recommendation::Verify;
  SignalFunction signal_function{};
  BaselineHumility baseline{};
  PolicyThresholds thresholds{};
  std::string config_digest;

  friend bool operator==(const AuditRecord&, const AuditRecord&) = default;
};

nlohmann::json audit_to_json(const AuditRecord& r);
AuditRecord audit_from_json(const nlohmann::json& j);
/// Single line, no trailing newline.
std::string serialize_audit(const AuditRecord& r);
AuditRecord deserialize_audit(std::string_view line);

std::vector<AuditRecord> read_audit_log(std::istream& is);

/// Recomputes the breakdown from the logged inputs and config. Throws std::runtime_error
/// if the logged digest does not match the logged config.
DutyBreakdown reevaluate(const AuditRecord& r);

class AuditWriteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AuditAck {
  std::size_t sequence = 0;  // 1-based count of records accepted by the sink
};

class AuditSink {
 public:
  virtual ~AuditSink() = default;
  /// Returns only after the record is durable in the sink; throws AuditWriteError otherwise.
  virtual AuditAck append(const AuditRecord& r) = 0;
};

/// Appends to a JSON Lines file. Concurrent appends are serialized; each line is written
/// and flushed whole.
class JsonlAuditSink final : public AuditSink {
 public:
  explicit JsonlAuditSink(std::filesystem::path path);
  AuditAck append(const AuditRecord& r) override;
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
  std::ofstream out_;
  std::mutex mutex_;
  std::size_t sequence_ = 0;
};

class MemoryAuditSink final : public AuditSink {
 public:
  AuditAck append(const AuditRecord& r) override;
  std::vector<AuditRecord> records() const;

 private:
  mutable std::mutex mutex_;
  std::vector<AuditRecord> records_;
};

/// Discards records; for evaluations that do not need a trail.
class NullAuditSink final : public AuditSink {
 public:
  AuditAck append(const AuditRecord&) override { return AuditAck{++count_}; }

 private:
  std::size_t count_ = 0;
};

AuditAck append_audit(const AuditRecord& r, AuditSink& sink);

struct ScenarioOutcome {
  DutyBreakdown breakdown;
  Recommendation recommendation = Recommendation::Verify;
  AuditRecord record;
  std::optional<std::string> audit_error;  // set when the sink rejected the record
};

/// Evaluates, recommends and appends exactly one record to `sink`.
ScenarioOutcome evaluate_scenario(const Scenario& s, const PolicyThresholds& t, AuditSink& sink,
                                  const AuditClock& clock = audit_now);

}  // namespace pduty
