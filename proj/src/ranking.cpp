#include "pduty/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "parallel.hpp"
#include "pduty/rng.hpp"
#include "pduty/serialization.hpp"

namespace pduty {

namespace {

constexpr std::uint64_t kScenarioStream = 0x72616e6b;  // "rank"
constexpr std::uint64_t kMaxAttempts = 1024;

bool ordered(const std::array<DutyBreakdown, 3>& d) {
  return d[0].action > d[1].action && d[1].action > d[2].action &&
         d[0].repair >= d[1].repair && d[1].repair >= d[2].repair;
}

}  // namespace

RankingScenario::RankingScenario(std::array<double, 3> k, double c_signal, SignalFunction sf)
    : k_(k), c_signal_(require_unit("c_signal", c_signal)), sf_(std::move(sf)) {
  for (double v : k_) require_unit("k", v);
  if (!(k_[0] - k_[1] >= kRankingGap && k_[1] - k_[2] >= kRankingGap)) {
    std::ostringstream os;
    os << "knowledge values must be strictly ordered k1 > k2 > k3 with gap >= " << kRankingGap
       << ", got (" << k_[0] << ", " << k_[1] << ", " << k_[2] << ")";
    throw DomainError("k", os.str());
  }
}

RankingScenario reference_scenario() { return RankingScenario({0.80, 0.50, 0.10}, 0.6); }

std::vector<double> hi_grid(double step, double max) {
  require_unit("max", max);
  if (!(step > 0.0)) throw DomainError("step", "grid step must be positive");
  const auto intervals = static_cast<std::size_t>(std::llround(max / step));
  std::vector<double> grid;
  grid.reserve(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) {
    grid.push_back(std::min(max, static_cast<double>(i) * step));
  }
  if (grid.back() < max) grid.push_back(max);
  return grid;
}

std::vector<RankingScenario> generate_scenarios(std::size_t n, std::uint64_t seed,
                                                const SignalFunction& sf) {
  if (n == 0) throw std::invalid_argument("generate_scenarios: n must be at least 1");
  const CounterRng rng(seed, kScenarioStream);
  std::vector<RankingScenario> out;
  out.reserve(n);
  for (std::uint64_t s = 0; s < n; ++s) {
    for (std::uint64_t attempt = 0;; ++attempt) {
      if (attempt == kMaxAttempts) {
        throw std::runtime_error("generate_scenarios: rejection sampling did not converge");
      }
      const std::uint64_t counter = s * kMaxAttempts + attempt;
      std::array<double, 3> k{rng.uniform(counter, 0), rng.uniform(counter, 1),
                              rng.uniform(counter, 2)};
      std::sort(k.begin(), k.end(), std::greater<>());
      if (k[0] - k[1] >= kRankingGap && k[1] - k[2] >= kRankingGap) {
        out.emplace_back(k, rng.uniform(counter, 3), sf);
        break;
      }
    }
  }
  return out;
}

RankingCheck check_ranking(const RankingScenario& s, std::span<const double> grid) {
  if (grid.empty()) throw DomainError("hi_grid", "humility grid must not be empty");
  for (double hi : grid) {
    if (!(hi >= 0.0 && hi <= kRankingGridMax)) {
      throw DomainError("hi_grid", "humility grid points must lie in [0, 0.95]");
    }
  }
  const auto baseline = BaselineHumility::none();
  RankingCheck out;
  out.points.reserve(grid.size());
  for (double hi : grid) {
    RankingPoint p;
    p.hi = hi;
    for (std::size_t i = 0; i < 3; ++i) {
      p.duties[i] = evaluate(DutyInputs(s.k()[i], hi, s.c_signal()), s.signal_function(), baseline);
    }
    p.preserved = ordered(p.duties);
    if (!p.preserved && out.preserved) {
      out.preserved = false;
      out.first_violation_hi = hi;
    }
    out.points.push_back(p);
  }
  return out;
}

RankingReport check_scenarios(std::span<const RankingScenario> scenarios,
                              std::span<const double> grid, unsigned workers) {
  std::vector<std::optional<double>> violations(scenarios.size());
  detail::parallel_for(scenarios.size(), std::max(1u, workers), [&](std::size_t i) {
    violations[i] = check_ranking(scenarios[i], grid).first_violation_hi;
  });

  RankingReport r;
  r.n_scenarios = scenarios.size();
  r.hi_grid.assign(grid.begin(), grid.end());
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (!violations[i]) {
      ++r.preserved_count;
    } else if (!r.first_violation) {
      r.first_violation = RankingViolation{i, *violations[i]};
    }
  }
  return r;
}

RankingReport run_ranking_suite(std::size_t n, std::uint64_t seed, std::span<const double> grid,
                                const SignalFunction& sf, unsigned workers) {
  const auto scenarios = generate_scenarios(n, seed, sf);
  return check_scenarios(scenarios, grid, workers);
}

nlohmann::json ranking_report_to_json(const RankingReport& r) {
  nlohmann::json j;
  j["n_scenarios"] = r.n_scenarios;
  j["preserved_count"] = r.preserved_count;
  j["hi_grid"] = r.hi_grid;
  if (r.first_violation) {
    j["first_violation"] = {{"scenario", r.first_violation->scenario},
                            {"hi", r.first_violation->hi}};
  } else {
    j["first_violation"] = nullptr;
  }
  return j;
}

std::vector<TrajectoryRow> trajectory_rows(const RankingScenario& s, const RankingCheck& check) {
  std::vector<TrajectoryRow> rows;
  rows.reserve(check.points.size() * 3);
  for (const auto& p : check.points) {
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& d = p.duties[i];
      rows.push_back(TrajectoryRow{p.hi, static_cast<int>(i + 1), s.k()[i], d.action, d.repair,
                                   d.action / d.repair});
    }
  }
  return rows;
}

void write_trajectory_csv(std::ostream& os, std::span<const TrajectoryRow> rows) {
  os << kTrajectoryCsvHeader << '\n';
  for (const auto& r : rows) {
    os << format_double(r.hi) << ',' << r.option << ',' << format_double(r.k) << ','
       << format_double(r.d_action) << ',' << format_double(r.d_repair) << ','
       << format_double(r.ratio) << '\n';
  }
}

std::vector<TrajectoryRow> read_trajectory_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kTrajectoryCsvHeader) {
    throw std::runtime_error("trajectory CSV: missing or unexpected header");
  }
  std::vector<TrajectoryRow> rows;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    try {
      if (f.size() != 6) throw std::invalid_argument("expected 6 fields");
      rows.push_back(TrajectoryRow{parse_double(f[0]), std::stoi(f[1]), parse_double(f[2]),
                                   parse_double(f[3]), parse_double(f[4]), parse_double(f[5])});
    } catch (const std::exception& e) {
      throw std::runtime_error("trajectory CSV line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return rows;
}

TrajectoryVerdict verify_trajectories(std::span<const TrajectoryRow> rows) {
  // Preserve first-appearance order of hi values.
  std::vector<double> order;
  std::map<double, std::vector<TrajectoryRow>> by_hi;
  for (const auto& r : rows) {
    auto [it, inserted] = by_hi.try_emplace(r.hi);
    if (inserted) order.push_back(r.hi);
    it->second.push_back(r);
  }

  TrajectoryVerdict v;
  for (double hi : order) {
    auto group = by_hi[hi];
    std::stable_sort(group.begin(), group.end(),
                     [](const TrajectoryRow& a, const TrajectoryRow& b) { return a.k > b.k; });
    for (std::size_t i = 1; i < group.size(); ++i) {
      const auto& hi_k = group[i - 1];
      const auto& lo_k = group[i];
      if (!(hi_k.d_action > lo_k.d_action) || !(hi_k.d_repair >= lo_k.d_repair)) {
        v.preserved = false;
        v.first_violation_hi = hi;
        v.first_violation_option = lo_k.option;
        return v;
      }
    }
  }
  return v;
}

}  // namespace pduty
