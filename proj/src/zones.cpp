#include "pduty/zones.hpp"

#include "pduty/duty.hpp"

namespace pduty {

std::string_view zone_name(Zone z) noexcept {
  switch (z) {
    case Zone::LowDuty: return "low_duty";
    case Zone::Equilibrium: return "equilibrium";
    case Zone::HighDuty: return "high_duty";
    case Zone::Unzoned: break;
  }
  return "unzoned";
}

Zone classify_zone(double hi, double c_signal) {
  require_unit("hi", hi);
  require_unit("c_signal", c_signal);
  if (hi < 0.2 || c_signal > 0.8) return Zone::HighDuty;
  if (hi > 0.8 && c_signal < 0.2) return Zone::LowDuty;
  if (hi > 0.3 && hi < 0.7) return Zone::Equilibrium;
  return Zone::Unzoned;
}

std::size_t ZoneCounts::sum() const noexcept {
  std::size_t s = 0;
  for (auto c : counts) s += c;
  return s;
}

void ZoneCounts::merge(const ZoneCounts& other) noexcept {
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
}

}  // namespace pduty
