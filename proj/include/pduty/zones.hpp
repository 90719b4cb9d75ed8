#pragma once

#include <array>
#include <cstddef>
#include <string_view>

namespace pduty {

/// Region of (HI, C_signal) space.
enum class Zone { LowDuty, Equilibrium, HighDuty, Unzoned };

inline constexpr std::array<Zone, 4> kAllZones = {Zone::LowDuty, Zone::Equilibrium,
                                                  Zone::HighDuty, Zone::Unzoned};

std::string_view zone_name(Zone z) noexcept;

/// Printed region conditions overlap, so they are tested in a fixed order:
/// HighDuty (hi < 0.2 or c > 0.8), LowDuty (hi > 0.8 and c < 0.2),
/// Equilibrium (0.3 < hi < 0.7), otherwise Unzoned.
Zone classify_zone(double hi, double c_signal);

struct ZoneCounts {
  std::array<std::size_t, 4> counts{};

  std::size_t& operator[](Zone z) noexcept { return counts[static_cast<std::size_t>(z)]; }
  std::size_t operator[](Zone z) const noexcept { return counts[static_cast<std::size_t>(z)]; }
  std::size_t sum() const noexcept;
  void merge(const ZoneCounts& other) noexcept;

  friend bool operator==(const ZoneCounts&, const ZoneCounts&) = default;
};

}  // namespace pduty
