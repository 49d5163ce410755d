// Copyright 2026 The INGB Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "ingb/geometry.h"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "ingb/errors.h"

namespace ingb {
namespace {

TEST(LogGammaTest, KnownValues) {
  EXPECT_NEAR(LogGamma(0.5), std::log(std::sqrt(std::numbers::pi)), 1e-12);
  EXPECT_NEAR(LogGamma(4.0), std::log(6.0), 1e-12);
  EXPECT_EQ(LogGamma(1.0), 0.0);
  EXPECT_EQ(LogGamma(2.0), 0.0);
}

TEST(LogGammaTest, MatchesLibm) {
  for (double x = 0.05; x < 170.0; x *= 1.17) {
    double expected = std::lgamma(x);
    EXPECT_NEAR(LogGamma(x), expected, 1e-10 * std::max(1.0, std::abs(expected)))
        << "x=" << x;
  }
}

TEST(LogGammaTest, Recurrence) {
  // ln G(x + 1) = ln G(x) + ln x
  for (double x = 0.51; x <= 50.0; x += 0.37) {
    double lhs = LogGamma(x + 1.0);
    double rhs = LogGamma(x) + std::log(x);
    EXPECT_NEAR(lhs, rhs, 1e-9 * std::max(1.0, std::abs(lhs))) << "x=" << x;
  }
}

TEST(LogGammaTest, RejectsNonPositive) {
  EXPECT_THROW(LogGamma(0.0), ContractError);
  EXPECT_THROW(LogGamma(-1.5), ContractError);
}

TEST(LogBallVolumeTest, LowDimensions) {
  const double pi = std::numbers::pi;
  EXPECT_NEAR(LogBallVolume(2, 1.0), std::log(pi), 1e-12);
  EXPECT_NEAR(LogBallVolume(3, 2.0), std::log(32.0 * pi / 3.0), 1e-12);
  EXPECT_NEAR(LogBallVolume(1, 5.0), std::log(10.0), 1e-12);
}

TEST(LogBallVolumeTest, ScalesAsPowerOfRadius) {
  for (int n = 1; n <= 40; ++n) {
    double diff = LogBallVolume(n, 2.0) - LogBallVolume(n, 1.0);
    EXPECT_NEAR(diff, n * std::log(2.0), 1e-9) << "n=" << n;
  }
}

TEST(LogBallVolumeTest, HighDimensionStaysFinite) {
  EXPECT_TRUE(std::isfinite(LogBallVolume(1000, 1e-3)));
  EXPECT_TRUE(std::isfinite(LogBallVolume(500, 1e3)));
}

TEST(LogBallVolumeTest, RejectsBadArguments) {
  EXPECT_THROW(LogBallVolume(0, 1.0), ContractError);
  EXPECT_THROW(LogBallVolume(2, 0.0), ContractError);
  EXPECT_THROW(LogBallVolume(2, -1.0), ContractError);
}

TEST(DistanceTest, Examples) {
  std::vector<double> o{0, 0}, a{3, 4}, one{1, 1};
  EXPECT_DOUBLE_EQ(MinkowskiDistance(o, a, DistanceOrder(2)), 5.0);
  EXPECT_DOUBLE_EQ(MinkowskiDistance(one, one, DistanceOrder(2)), 0.0);
  EXPECT_DOUBLE_EQ(MinkowskiDistance(o, one, DistanceOrder(1)), 2.0);
  EXPECT_DOUBLE_EQ(SquaredEuclidean(o, a), 25.0);
}

TEST(DistanceTest, GeneralOrder) {
  std::vector<double> o{0, 0}, a{3, 4};
  EXPECT_NEAR(MinkowskiDistance(o, a, DistanceOrder(3)),
              std::cbrt(27.0 + 64.0), 1e-12);
}

TEST(DistanceTest, Contracts) {
  EXPECT_THROW(DistanceOrder(0.5), ContractError);
  std::vector<double> a{1, 2}, b{1, 2, 3};
  EXPECT_THROW(MinkowskiDistance(a, b, DistanceOrder(2)), ContractError);
}

TEST(DistanceTest, MetricAxiomsOnRandomPoints) {
  std::mt19937_64 gen(7);
  std::normal_distribution<double> normal;
  for (double p : {1.0, 1.5, 2.0, 4.0}) {
    DistanceOrder order(p);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<double> x(5), y(5), z(5);
      for (int j = 0; j < 5; ++j) {
        x[j] = normal(gen);
        y[j] = normal(gen);
        z[j] = normal(gen);
      }
      double xy = MinkowskiDistance(x, y, order);
      EXPECT_GE(xy, 0.0);
      EXPECT_DOUBLE_EQ(xy, MinkowskiDistance(y, x, order));
      EXPECT_LE(xy, MinkowskiDistance(x, z, order) +
                        MinkowskiDistance(z, y, order) + 1e-12);
    }
  }
}

}  // namespace
}  // namespace ingb
