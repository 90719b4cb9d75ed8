#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "pduty/statistics.hpp"

using pduty::pearson;
using pduty::RunningCovariance;
using pduty::RunningMoments;

TEST(Pearson, Examples) {
  const std::vector<double> a{1, 2, 3}, rev{3, 2, 1};
  EXPECT_DOUBLE_EQ(*pearson(a, a), 1.0);
  EXPECT_DOUBLE_EQ(*pearson(a, rev), -1.0);
  // Centered sums: Sxy = 3, Sxx = Syy = 5.
  const std::vector<double> x{1, 2, 3, 4}, y{2, 1, 4, 3};
  EXPECT_NEAR(*pearson(x, y), 0.6, 1e-15);
}

TEST(Pearson, DegenerateIsAbsent) {
  const std::vector<double> flat{2, 2, 2}, a{1, 2, 3}, one{1};
  EXPECT_FALSE(pearson(flat, a).has_value());
  EXPECT_FALSE(pearson(a, flat).has_value());
  EXPECT_FALSE(pearson(one, one).has_value());
  const std::vector<double> b{1, 2};
  EXPECT_THROW(pearson(a, b), std::invalid_argument);
}

TEST(RunningMoments, SingleSampleHasZeroVariance) {
  RunningMoments m;
  m.add(0.3);
  EXPECT_EQ(m.variance(), 0.0);
  EXPECT_EQ(m.mean(), 0.3);
}

TEST(RunningMoments, MatchesTwoPassAndMergesAssociatively) {
  std::mt19937_64 eng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> xs(10007);
  for (auto& x : xs) x = u(eng);

  double mean = 0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double ss = 0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  const double var = ss / static_cast<double>(xs.size() - 1);

  RunningMoments seq;
  for (double x : xs) seq.add(x);
  EXPECT_NEAR(seq.mean(), mean, 1e-14);
  EXPECT_NEAR(seq.variance(), var, 1e-14);

  for (std::size_t parts : {2u, 3u, 7u, 64u}) {
    RunningMoments merged;
    const std::size_t chunk = (xs.size() + parts - 1) / parts;
    for (std::size_t s = 0; s < xs.size(); s += chunk) {
      RunningMoments part;
      for (std::size_t i = s; i < std::min(xs.size(), s + chunk); ++i) part.add(xs[i]);
      merged.merge(part);
    }
    EXPECT_EQ(merged.count(), xs.size());
    EXPECT_NEAR(merged.mean(), mean, 1e-14);
    EXPECT_NEAR(merged.variance(), var, 1e-14);
  }
}

TEST(RunningCovariance, AgreesWithTwoPassPearson) {
  std::mt19937_64 eng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> xs(5000), ys(5000);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xs[i] = u(eng);
    ys[i] = 0.3 * xs[i] + u(eng);
  }
  RunningCovariance a, b, all;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    (i < 1234 ? a : b).add(xs[i], ys[i]);
    all.add(xs[i], ys[i]);
  }
  a.merge(b);
  const double r = *pearson(xs, ys);
  EXPECT_NEAR(*all.correlation(), r, 1e-12);
  EXPECT_NEAR(*a.correlation(), r, 1e-12);
  EXPECT_NEAR(a.covariance(), all.covariance(), 1e-14);

  RunningCovariance flat;
  flat.add(1, 1);
  flat.add(1, 2);
  EXPECT_FALSE(flat.correlation().has_value());
}
