#pragma once

/**
 * @file statistics.hpp
 * @brief Streaming moments with deterministic merge, and sample Pearson correlation.
 *
 * Accumulators use Welford updates within a partition and the Chan et al.
 * pairwise combination across partitions. Merging the same partitions in
 * the same order always yields bit-identical results.
 */

#include <cstddef>
#include <optional>
#include <span>

namespace pduty {

class RunningMoments {
 public:
  void add(double x) noexcept;
  void merge(const RunningMoments& other) noexcept;

  std::size_t count() const noexcept { return n_; }
  double mean() const noexcept { return mean_; }
  /// Unbiased (n - 1) estimator; 0 when fewer than two samples.
  double variance() const noexcept;

 private:
  std::size_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// Joint first and second moments of (x, y).
class RunningCovariance {
 public:
  void add(double x, double y) noexcept;
  void merge(const RunningCovariance& other) noexcept;

  std::size_t count() const noexcept { return n_; }
  double mean_x() const noexcept { return mean_x_; }
  double mean_y() const noexcept { return mean_y_; }
  double variance_x() const noexcept;
  double variance_y() const noexcept;
  double covariance() const noexcept;
  /// Absent when n < 2 or either coordinate is constant.
  std::optional<double> correlation() const noexcept;

 private:
  std::size_t n_ = 0;
  double mean_x_ = 0.0;
  double mean_y_ = 0.0;
  double m2_x_ = 0.0;
  double m2_y_ = 0.0;
  double c_xy_ = 0.0;
};

/// Sample Pearson r computed in two passes. Absent for constant input or n < 2.
/// Throws std::invalid_argument on length mismatch.
std::optional<double> pearson(std::span<const double> xs, std::span<const double> ys);

}  // namespace pduty
