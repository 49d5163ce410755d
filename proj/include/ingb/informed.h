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

#ifndef INGB_INFORMED_H_
#define INGB_INFORMED_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ingb/dataset.h"
#include "ingb/geometry.h"
#include "ingb/granular.h"

namespace ingb {

// Guards sums of zero distances between duplicated rows.
inline constexpr double kInformedEpsilon = 1e-12;

// Which side of the mean entropy qualifies a ball as a seed.
enum class SeedThreshold { kAtLeastMean, kAtMostMean };

// Exponent applied to |GB| in the sparsity numerator.
enum class SparsityExponent { kDimension, kOne };

// Density ratio of row `i` within gb: the reciprocal mean distance to
// same-class members over the reciprocal mean distance to other-class
// members. Zero when i has no same-class companion in the ball. Throws
// ContractError if i is not a member.
double InstanceStat(const GranularBall& gb, std::size_t i, const Dataset& d,
                    DistanceOrder p);

// InstanceStat for every member, in member order.
std::vector<double> InstanceStats(const GranularBall& gb, const Dataset& d,
                                  DistanceOrder p);

// -(1/N) sum rho log2 rho with rho = phi / sum(phi); zero when sum(phi) = 0.
double EntropyOfStats(std::span<const double> phi);

double BallEntropy(const GranularBall& gb, const Dataset& d, DistanceOrder p);

// Positions (into `entropies`) of the balls whose entropy meets the mean
// threshold. Never empty for nonempty input.
std::vector<std::size_t> SelectSeeds(
    std::span<const double> entropies,
    SeedThreshold threshold = SeedThreshold::kAtLeastMean);

// Same, computing the entropies of `candidates` first.
std::vector<std::size_t> SelectSeeds(
    std::span<const GranularBall> candidates, const Dataset& d,
    DistanceOrder p, SeedThreshold threshold = SeedThreshold::kAtLeastMean);

// ln(|GB|^e / V_n(r)); +infinity for a zero-radius ball.
double LogSparsity(const GranularBall& gb, std::size_t dimension,
                   SparsityExponent exponent = SparsityExponent::kDimension);

// Integer apportionment of `total` proportional to `weights` (largest
// remainder, ties to the smaller index). The result sums to `total`.
std::vector<std::size_t> ApportionLargestRemainder(
    std::span<const double> weights, std::size_t total);

struct SeedPlan {
  int target_class = 0;
  std::size_t deficit = 0;
  std::vector<std::size_t> ball_ids;  // caller's ids, parallel to quotas
  std::vector<std::size_t> quotas;
  std::vector<double> log_sparsity;
};

// Splits `deficit` over the seed balls in proportion to their sparsity.
// Zero-radius seeds take the largest finite weight. Throws ContractError
// when deficit is zero.
SeedPlan Allocate(std::span<const GranularBall> seeds,
                  std::span<const std::size_t> ball_ids, const Dataset& d,
                  std::size_t deficit, int target_class,
                  SparsityExponent exponent = SparsityExponent::kDimension);

struct SynthesisConfig {
  double sigma_scale = 1.0;
  int max_rejects = 10;
  std::uint64_t seed = 42;
  // Pair centers use 0.5/0.5 instead of instance-statistic weights.
  bool uniform_pair_weights = false;
};

// One Gaussian draw, recorded before the containment check.
struct SynthesisDraw {
  std::vector<double> pair_center;
  double sigma = 0.0;
  std::vector<double> raw;
  bool accepted = false;
};

// Generates `quota` points labelled target_class around pairs of the ball's
// target-class members; every point ends up inside the support sphere.
// Returns a row-major (quota x n) matrix.
std::vector<double> SynthesizeInBall(const GranularBall& gb, std::size_t quota,
                                     const Dataset& d,
                                     const SynthesisConfig& cfg,
                                     int target_class, DistanceOrder p,
                                     std::vector<SynthesisDraw>* trace =
                                         nullptr);

struct IngbConfig {
  SplitConfig split;
  SynthesisConfig synthesis;
  SeedThreshold seed_threshold = SeedThreshold::kAtLeastMean;
  SparsityExponent sparsity_exponent = SparsityExponent::kDimension;
};

struct IngbRound {
  int target_class = 0;
  std::size_t deficit = 0;
  std::vector<std::size_t> candidate_balls;  // ids of balls labelled target
  std::vector<double> entropies;             // parallel to candidate_balls
  SeedPlan plan;
  bool fallback = false;  // no ball carried the label
};

struct IngbResult {
  Dataset data;
  std::vector<GranularBall> balls;
  std::vector<IngbRound> rounds;
  // For each synthetic row (in append order) the ball it came from, or -1
  // for fallback jitter.
  std::vector<long> synthetic_sources;
};

// Balances every class up to the largest class count.
IngbResult IngbOversample(const Dataset& d, const IngbConfig& cfg);

}  // namespace ingb

#endif  // INGB_INFORMED_H_
