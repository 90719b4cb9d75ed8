#include "pduty/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pduty {

void RunningMoments::add(double x) noexcept {
  ++n_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(n_);
  m2_ += delta * (x - mean_);
}

void RunningMoments::merge(const RunningMoments& other) noexcept {
  if (other.n_ == 0) return;
  if (n_ == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(n_);
  const double nb = static_cast<double>(other.n_);
  const double n = na + nb;
  const double delta = other.mean_ - mean_;
  mean_ += delta * nb / n;
  m2_ += other.m2_ + delta * delta * na * nb / n;
  n_ += other.n_;
}

double RunningMoments::variance() const noexcept {
  return n_ < 2 ? 0.0 : std::max(0.0, m2_ / static_cast<double>(n_ - 1));
}

void RunningCovariance::add(double x, double y) noexcept {
  ++n_;
  const double n = static_cast<double>(n_);
  const double dx = x - mean_x_;
  const double dy = y - mean_y_;
  mean_x_ += dx / n;
  mean_y_ += dy / n;
  m2_x_ += dx * (x - mean_x_);
  m2_y_ += dy * (y - mean_y_);
  c_xy_ += dx * (y - mean_y_);
}

void RunningCovariance::merge(const RunningCovariance& other) noexcept {
  if (other.n_ == 0) return;
  if (n_ == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(n_);
  const double nb = static_cast<double>(other.n_);
  const double n = na + nb;
  const double dx = other.mean_x_ - mean_x_;
  const double dy = other.mean_y_ - mean_y_;
  const double w = na * nb / n;
  mean_x_ += dx * nb / n;
  mean_y_ += dy * nb / n;
  m2_x_ += other.m2_x_ + dx * dx * w;
  m2_y_ += other.m2_y_ + dy * dy * w;
  c_xy_ += other.c_xy_ + dx * dy * w;
  n_ += other.n_;
}

double RunningCovariance::variance_x() const noexcept {
  return n_ < 2 ? 0.0 : std::max(0.0, m2_x_ / static_cast<double>(n_ - 1));
}

double RunningCovariance::variance_y() const noexcept {
  return n_ < 2 ? 0.0 : std::max(0.0, m2_y_ / static_cast<double>(n_ - 1));
}

double RunningCovariance::covariance() const noexcept {
  return n_ < 2 ? 0.0 : c_xy_ / static_cast<double>(n_ - 1);
}

std::optional<double> RunningCovariance::correlation() const noexcept {
  if (n_ < 2 || !(m2_x_ > 0.0) || !(m2_y_ > 0.0)) return std::nullopt;
  return std::clamp(c_xy_ / std::sqrt(m2_x_ * m2_y_), -1.0, 1.0);
}

std::optional<double> pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument("pearson: sequences differ in length");
  }
  const std::size_t n = xs.size();
  if (n < 2) return std::nullopt;

  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / static_cast<double>(n);
  const double my = sy / static_cast<double>(n);

  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (!(sxx > 0.0) || !(syy > 0.0)) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

}  // namespace pduty
