#pragma once

// Test-only reference computations. Nothing here calls into the library's
// evaluation path: duties use the factored equation, sampling uses the
// standard library engine, and moments come from closed forms.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

/// Factored form K * [(1 - HI) + HI * g(C)] with the floor max(HI, lambda).
inline double total_factored(double k, double hi, double g_of_c, double lambda = 0.0) {
  const double h = std::max(hi, lambda);
  return k * ((1.0 - h) + h * g_of_c);
}

/// Closed-form moments of D_total for linear g with independent U(0,1) inputs and
/// HI floored at lambda. M = 1 - H'(1 - C), D_total = K * M.
struct LinearMoments {
  double mean;
  double variance;
  double pearson_k_total;
};

inline LinearMoments linear_moments(double lambda) {
  const double l2 = lambda * lambda, l3 = l2 * lambda;
  const double eh = l2 + (1.0 - l2) / 2.0;    // E[max(H, lambda)]
  const double eh2 = l3 + (1.0 - l3) / 3.0;   // E[max(H, lambda)^2]
  const double em = 1.0 - 0.5 * eh;            // E[1 - C] = 1/2
  const double em2 = 1.0 - eh + eh2 / 3.0;     // E[(1 - C)^2] = 1/3
  const double mean = 0.5 * em;
  const double var = em2 / 3.0 - mean * mean;  // E[K^2] = 1/3
  const double cov = em * (1.0 / 3.0 - 1.0 / 4.0);
  return {mean, var, cov / std::sqrt(var / 12.0)};
}

/// Expected D_total for exponential g with gain a: E[g] = (1 - e^-a) / a.
inline double exponential_mean(double gain) {
  const double eg = (1.0 - std::exp(-gain)) / gain;
  return 0.5 * (0.5 + 0.5 * eg);
}

struct BruteForce {
  double mean;
  double variance;
  double pearson;
};

/// Plain Monte Carlo with std::mt19937_64 and two-pass statistics.
inline BruteForce brute_force(std::size_t n, std::uint64_t seed, double lambda,
                              const std::function<double(double)>& g) {
  std::mt19937_64 eng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> ks(n), ts(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double k = u(eng), hi = u(eng), c = u(eng);
    ks[i] = k;
    ts[i] = total_factored(k, hi, g(c), lambda);
  }
  double mk = 0, mt = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mk += ks[i];
    mt += ts[i];
  }
  mk /= static_cast<double>(n);
  mt /= static_cast<double>(n);
  double skk = 0, stt = 0, skt = 0;
  for (std::size_t i = 0; i < n; ++i) {
    skk += (ks[i] - mk) * (ks[i] - mk);
    stt += (ts[i] - mt) * (ts[i] - mt);
    skt += (ks[i] - mk) * (ts[i] - mt);
  }
  return {mt, stt / static_cast<double>(n - 1), skt / std::sqrt(skk * stt)};
}

/// Root of f on [lo, hi] by bisection; f(lo) and f(hi) must differ in sign.
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     int iterations = 200) {
  double flo = f(lo);
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace oracle
