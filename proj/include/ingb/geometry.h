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

#ifndef INGB_GEOMETRY_H_
#define INGB_GEOMETRY_H_

#include <span>

namespace ingb {

// Minkowski exponent p >= 1.
class DistanceOrder {
 public:
  DistanceOrder() = default;
  explicit DistanceOrder(double p);

  double value() const { return p_; }
  bool is_euclidean() const { return p_ == 2.0; }

 private:
  double p_ = 2.0;
};

// ln Gamma(x) for x > 0, accurate to about 15 significant digits.
// Unlike std::lgamma this touches no global state.
double LogGamma(double x);

// ln of the volume of an n-ball of radius r:
//   (n / 2) ln pi + n ln r - ln Gamma(n / 2 + 1).
// Volumes are only ever handled in log space; r^n overflows quickly.
double LogBallVolume(int n, double r);

double MinkowskiDistance(std::span<const double> a, std::span<const double> b,
                         DistanceOrder p);

double SquaredEuclidean(std::span<const double> a, std::span<const double> b);

}  // namespace ingb

#endif  // INGB_GEOMETRY_H_
