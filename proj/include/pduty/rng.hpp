#pragma once

// Counter-based uniform generator. Every draw is a pure function of
// (seed, counter, lane), so any trial can be regenerated in isolation and
// partitioning the index range across workers cannot change a result.

#include <cstdint>

namespace pduty {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class CounterRng {
 public:
  /// `stream` separates independent uses of one user seed (trials, scenarios, ...).
  constexpr explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
      : key_(mix64(mix64(seed) ^ mix64(stream ^ 0x5851f42d4c957f2dULL))) {}

  constexpr std::uint64_t bits(std::uint64_t counter, std::uint32_t lane) const noexcept {
    return mix64(mix64(key_ ^ counter) ^ (static_cast<std::uint64_t>(lane) * 0xd6e8feb86659fd93ULL));
  }

  /// Uniform on [0, 1) with 53 random mantissa bits.
  constexpr double uniform(std::uint64_t counter, std::uint32_t lane) const noexcept {
    return static_cast<double>(bits(counter, lane) >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t key_;
};

}  // namespace pduty
