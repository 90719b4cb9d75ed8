#include "pduty/audit.hpp"

#include <openssl/evp.h>

#include <array>
#include <charconv>
#include <cstdio>
#include <istream>

#include "pduty/serialization.hpp"

namespace pduty {

namespace {

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 0xf];
  }
  return out;
}

nlohmann::json config_json(const SignalFunction& sf, const BaselineHumility& baseline,
                           const PolicyThresholds& thresholds) {
  return {{"g", signal_to_json(sf)},
          {"lambda", baseline.lambda()},
          {"defer_below", thresholds.defer_below()}};
}

}  // namespace

AuditTime audit_now() {
  return std::chrono::time_point_cast<std::chrono::microseconds>(std::chrono::system_clock::now());
}

std::string format_timestamp(AuditTime t) {
  using namespace std::chrono;
  const auto day = floor<days>(t);
  const year_month_day ymd(day);
  const hh_mm_ss hms(t - day);
  std::array<char, 40> buf{};
  std::snprintf(buf.data(), buf.size(), "%04d-%02u-%02uT%02d:%02d:%02d.%06lldZ",
                static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()), static_cast<int>(hms.hours().count()),
                static_cast<int>(hms.minutes().count()), static_cast<int>(hms.seconds().count()),
                static_cast<long long>(hms.subseconds().count()));
  return buf.data();
}

AuditTime parse_timestamp(std::string_view text) {
  using namespace std::chrono;
  auto fail = [&]() -> AuditTime {
    throw std::invalid_argument("bad timestamp '" + std::string(text) + "'");
  };
  auto number = [&](std::size_t pos, std::size_t len) {
    int v = 0;
    if (pos + len > text.size()) fail();
    const auto res = std::from_chars(text.data() + pos, text.data() + pos + len, v);
    if (res.ec != std::errc{} || res.ptr != text.data() + pos + len) fail();
    return v;
  };
  if (text.size() < 20 || text[4] != '-' || text[7] != '-' || text[10] != 'T' || text[13] != ':' ||
      text[16] != ':' || text.back() != 'Z') {
    return fail();
  }
  const year_month_day ymd{year{number(0, 4)}, month{static_cast<unsigned>(number(5, 2))},
                           day{static_cast<unsigned>(number(8, 2))}};
  if (!ymd.ok()) return fail();
  const int hh = number(11, 2), mm = number(14, 2), ss = number(17, 2);
  if (hh > 23 || mm > 59 || ss > 60) return fail();

  long long micros = 0;
  if (text.size() > 20) {
    if (text[19] != '.') return fail();
    const std::size_t digits = text.size() - 21;
    if (digits == 0 || digits > 6) return fail();
    micros = number(20, digits);
    for (std::size_t i = digits; i < 6; ++i) micros *= 10;
  }
  return sys_days(ymd) + hours(hh) + minutes(mm) + seconds(ss) + microseconds(micros);
}

std::string config_digest(const SignalFunction& sf, const BaselineHumility& baseline,
                          const PolicyThresholds& thresholds) {
  // nlohmann::json objects keep keys sorted, so dump() is canonical.
  return sha256_hex(config_json(sf, baseline, thresholds).dump());
}

nlohmann::json audit_to_json(const AuditRecord& r) {
  return {{"timestamp", format_timestamp(r.timestamp)},
          {"scenario_id", r.scenario_id},
          {"inputs", inputs_to_json(r.inputs)},
          {"breakdown", breakdown_to_json(r.breakdown)},
          {"recommendation", std::string(recommendation_name(r.recommendation))},
          {"config", config_json(r.signal_function, r.baseline, r.thresholds)},
          {"config_digest", r.config_digest}};
}

AuditRecord audit_from_json(const nlohmann::json& j) {
  const auto& cfg = j.at("config");
  AuditRecord r;
  r.timestamp = parse_timestamp(j.at("timestamp").get<std::string>());
  r.scenario_id = j.at("scenario_id").get<std::string>();
  r.inputs = inputs_from_json(j.at("inputs"));
  r.breakdown = breakdown_from_json(j.at("breakdown"));
  r.recommendation = recommendation_from_name(j.at("recommendation").get<std::string>());
  r.signal_function = signal_from_json(cfg.at("g"));
  r.baseline = BaselineHumility(cfg.at("lambda").get<double>());
  r.thresholds = PolicyThresholds(cfg.at("defer_below").get<double>());
  r.config_digest = j.at("config_digest").get<std::string>();
  return r;
}

std::string serialize_audit(const AuditRecord& r) { return audit_to_json(r).dump(); }

AuditRecord deserialize_audit(std::string_view line) {
  return audit_from_json(nlohmann::json::parse(line));
}

std::vector<AuditRecord> read_audit_log(std::istream& is) {
  std::vector<AuditRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      out.push_back(deserialize_audit(line));
    } catch (const std::exception& e) {
      throw std::runtime_error("audit log line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

DutyBreakdown reevaluate(const AuditRecord& r) {
  if (config_digest(r.signal_function, r.baseline, r.thresholds) != r.config_digest) {
    throw std::runtime_error("audit record '" + r.scenario_id +
                             "': config does not match its digest");
  }
  return evaluate(r.inputs, r.signal_function, r.baseline);
}

JsonlAuditSink::JsonlAuditSink(std::filesystem::path path)
    : path_(std::move(path)), out_(path_, std::ios::binary | std::ios::app) {
  if (!out_) throw AuditWriteError("cannot open audit log for appending: " + path_.string());
}

AuditAck JsonlAuditSink::append(const AuditRecord& r) {
  std::string line = serialize_audit(r);
  line += '\n';
  std::lock_guard lock(mutex_);
  out_.write(line.data(), static_cast<std::streamsize>(line.size()));
  out_.flush();
  if (!out_) {
    out_.clear();
    throw AuditWriteError("failed to append audit record to " + path_.string());
  }
  return AuditAck{++sequence_};
}

AuditAck MemoryAuditSink::append(const AuditRecord& r) {
  std::lock_guard lock(mutex_);
  records_.push_back(r);
  return AuditAck{records_.size()};
}

std::vector<AuditRecord> MemoryAuditSink::records() const {
  std::lock_guard lock(mutex_);
  return records_;
}

AuditAck append_audit(const AuditRecord& r, AuditSink& sink) { return sink.append(r); }

ScenarioOutcome evaluate_scenario(const Scenario& s, const PolicyThresholds& t, AuditSink& sink,
                                  const AuditClock& clock) {
  ScenarioOutcome out;
  out.breakdown = evaluate(s.inputs, s.signal_function, s.baseline);
  out.recommendation = recommend(out.breakdown, t);
  out.record = AuditRecord{clock(),        s.id,        s.inputs,
                           out.breakdown,  out.recommendation,
                           s.signal_function, s.baseline, t,
                           config_digest(s.signal_function, s.baseline, t)};
  try {
    append_audit(out.record, sink);
  } catch (const std::exception& e) {
    out.audit_error = e.what();
  }
  return out;
}

}  // namespace pduty
