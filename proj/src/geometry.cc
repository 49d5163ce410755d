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

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "ingb/errors.h"

namespace ingb {
namespace {

// Lanczos approximation, g = 7, nine terms.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double LanczosLogGamma(double x) {
  // Valid for x >= 0.5.
  const double z = x - 1.0;
  double sum = kLanczosCoefficients[0];
  for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i) {
    sum += kLanczosCoefficients[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) -
         t + std::log(sum);
}

// zeta(k) - 1 for k = 2, 3, ...; Euler-Maclaurin tail after 63 terms.
constexpr int kZetaTerms = 40;

std::array<double, kZetaTerms> ZetaMinusOne() {
  std::array<double, kZetaTerms> out{};
  constexpr long double kN = 64.0L;
  for (int i = 0; i < kZetaTerms; ++i) {
    const long double k = i + 2;
    long double sum = 0.0L;
    for (int n = 2; n < 64; ++n) sum += std::pow(static_cast<long double>(n), -k);
    sum += std::pow(kN, 1.0L - k) / (k - 1.0L) + 0.5L * std::pow(kN, -k) +
           k * std::pow(kN, -k - 1.0L) / 12.0L -
           k * (k + 1.0L) * (k + 2.0L) * std::pow(kN, -k - 3.0L) / 720.0L;
    out[i] = static_cast<double>(sum);
  }
  return out;
}

// log Gamma(1 + z) for |z| <= 0.5, accurate relative to the result near the
// zeros at z = 0.
double LogGammaOnePlus(double z) {
  static const std::array<double, kZetaTerms> zeta = ZetaMinusOne();
  double series = 0.0;
  double power = -z;
  for (int i = 0; i < kZetaTerms; ++i) {
    power *= -z;
    series += zeta[i] * power / (i + 2);
  }
  return (z - std::log1p(z)) - std::numbers::egamma * z + series;
}

}  // namespace

DistanceOrder::DistanceOrder(double p) : p_(p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw ContractError("distance order p must be a finite value >= 1, got " +
                        std::to_string(p));
  }
}

double LogGamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw ContractError("LogGamma domain error: x must be positive, got " +
                        std::to_string(x));
  }
  // Exact small integers, so Gamma(1) and Gamma(2) give exactly zero.
  if (x == 1.0 || x == 2.0) return 0.0;
  if (x >= 0.5 && x <= 1.5) return LogGammaOnePlus(x - 1.0);
  if (x > 1.5 && x <= 2.5) {
    return std::log1p(x - 2.0) + LogGammaOnePlus(x - 2.0);
  }
  if (x < 0.5) {
    // Gamma(x) = Gamma(x + 1) / x keeps the argument in the Lanczos range.
    return LanczosLogGamma(x + 1.0) - std::log(x);
  }
  return LanczosLogGamma(x);
}

double LogBallVolume(int n, double r) {
  if (n < 1) {
    throw ContractError("LogBallVolume: dimension must be >= 1, got " +
                        std::to_string(n));
  }
  if (!(r > 0.0)) {
    throw ContractError("LogBallVolume: radius must be positive, got " +
                        std::to_string(r));
  }
  const double half_n = 0.5 * n;
  return half_n * std::log(std::numbers::pi) + n * std::log(r) -
         LogGamma(half_n + 1.0);
}

double MinkowskiDistance(std::span<const double> a, std::span<const double> b,
                         DistanceOrder p) {
  if (a.size() != b.size()) {
    throw ContractError("MinkowskiDistance: dimension mismatch (" +
                        std::to_string(a.size()) + " vs " +
                        std::to_string(b.size()) + ")");
  }
  if (p.is_euclidean()) return std::sqrt(SquaredEuclidean(a, b));
  const double order = p.value();
  double sum = 0.0;
  if (order == 1.0) {
    for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
    return sum;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += std::pow(std::abs(a[i] - b[i]), order);
  }
  return std::pow(sum, 1.0 / order);
}

double SquaredEuclidean(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    sum += diff * diff;
  }
  return sum;
}

}  // namespace ingb
