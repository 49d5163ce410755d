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

#include "ingb/informed.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "ingb/errors.h"
#include "ingb/random.h"

namespace ingb {
namespace {

// Relative slack when comparing an entropy with the mean of a list that
// contains it; the mean of equal values is not always bit-equal to them.
constexpr double kThresholdSlack = 1e-12;

}  // namespace

double InstanceStat(const GranularBall& gb, std::size_t i, const Dataset& d,
                    DistanceOrder p) {
  if (std::find(gb.members.begin(), gb.members.end(), i) == gb.members.end()) {
    throw ContractError("row " + std::to_string(i) +
                        " is not a member of the ball");
  }
  const int y = d.label(i);
  const auto x = d.row(i);
  std::size_t homo = 0;
  std::size_t hete = 0;
  double homo_distance = 0.0;
  double hete_distance = 0.0;
  for (std::size_t j : gb.members) {
    if (j == i) continue;
    const double dist = MinkowskiDistance(x, d.row(j), p);
    if (d.label(j) == y) {
      ++homo;
      homo_distance += dist;
    } else {
      ++hete;
      hete_distance += dist;
    }
  }
  if (homo == 0) return 0.0;
  const double homo_density =
      static_cast<double>(homo) / (homo_distance + kInformedEpsilon);
  if (hete == 0) return homo_density;
  const double hete_density =
      static_cast<double>(hete) / (hete_distance + kInformedEpsilon);
  return homo_density / hete_density;
}

std::vector<double> InstanceStats(const GranularBall& gb, const Dataset& d,
                                  DistanceOrder p) {
  std::vector<double> phi;
  phi.reserve(gb.size());
  for (std::size_t i : gb.members) phi.push_back(InstanceStat(gb, i, d, p));
  return phi;
}

double EntropyOfStats(std::span<const double> phi) {
  if (phi.empty()) return 0.0;
  const double total = std::accumulate(phi.begin(), phi.end(), 0.0);
  if (!(total > 0.0)) return 0.0;
  double sum = 0.0;
  for (double v : phi) {
    const double rho = v / total;
    if (rho > 0.0) sum -= rho * std::log2(rho);
  }
  return sum / static_cast<double>(phi.size());
}

double BallEntropy(const GranularBall& gb, const Dataset& d, DistanceOrder p) {
  return EntropyOfStats(InstanceStats(gb, d, p));
}

std::vector<std::size_t> SelectSeeds(std::span<const double> entropies,
                                     SeedThreshold threshold) {
  std::vector<std::size_t> seeds;
  if (entropies.empty()) return seeds;
  const double mean =
      std::accumulate(entropies.begin(), entropies.end(), 0.0) /
      static_cast<double>(entropies.size());
  const double slack = kThresholdSlack * std::max(1.0, std::abs(mean));
  for (std::size_t j = 0; j < entropies.size(); ++j) {
    const bool keep = threshold == SeedThreshold::kAtLeastMean
                          ? entropies[j] >= mean - slack
                          : entropies[j] <= mean + slack;
    if (keep) seeds.push_back(j);
  }
  return seeds;
}

std::vector<std::size_t> SelectSeeds(std::span<const GranularBall> candidates,
                                     const Dataset& d, DistanceOrder p,
                                     SeedThreshold threshold) {
  std::vector<double> entropies;
  entropies.reserve(candidates.size());
  for (const auto& gb : candidates) entropies.push_back(BallEntropy(gb, d, p));
  return SelectSeeds(entropies, threshold);
}

double LogSparsity(const GranularBall& gb, std::size_t dimension,
                   SparsityExponent exponent) {
  if (!(gb.radius > 0.0)) return std::numeric_limits<double>::infinity();
  const double power = exponent == SparsityExponent::kDimension
                           ? static_cast<double>(dimension)
                           : 1.0;
  return power * std::log(static_cast<double>(gb.size())) -
         LogBallVolume(static_cast<int>(dimension), gb.radius);
}

std::vector<std::size_t> ApportionLargestRemainder(
    std::span<const double> weights, std::size_t total) {
  std::vector<std::size_t> quotas(weights.size(), 0);
  if (weights.empty() || total == 0) return quotas;
  const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(sum > 0.0) || !std::isfinite(sum)) {
    throw ContractError("apportionment weights must have a positive sum");
  }
  std::vector<double> fraction(weights.size());
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double exact =
        static_cast<double>(total) * (weights[i] / sum);
    const double whole = std::floor(exact);
    quotas[i] = static_cast<std::size_t>(whole);
    fraction[i] = exact - whole;
    assigned += quotas[i];
  }
  // Rounding can only leave the floors summing to at most `total`; guard
  // against the impossible overshoot anyway by trimming from the back.
  for (std::size_t i = weights.size(); assigned > total && i > 0; --i) {
    const std::size_t take = std::min(quotas[i - 1], assigned - total);
    quotas[i - 1] -= take;
    assigned -= take;
  }
  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return fraction[a] > fraction[b];
                   });
  for (std::size_t r = 0; assigned < total; ++r) {
    ++quotas[order[r % order.size()]];
    ++assigned;
  }
  return quotas;
}

SeedPlan Allocate(std::span<const GranularBall> seeds,
                  std::span<const std::size_t> ball_ids, const Dataset& d,
                  std::size_t deficit, int target_class,
                  SparsityExponent exponent) {
  if (deficit == 0) throw ContractError("allocation needs a positive deficit");
  if (seeds.empty()) throw ContractError("allocation needs at least one seed");
  if (seeds.size() != ball_ids.size()) {
    throw ContractError("seed and id lists differ in length");
  }
  SeedPlan plan;
  plan.target_class = target_class;
  plan.deficit = deficit;
  plan.ball_ids.assign(ball_ids.begin(), ball_ids.end());
  double max_finite = -std::numeric_limits<double>::infinity();
  for (const auto& gb : seeds) {
    const double ls = LogSparsity(gb, d.num_features(), exponent);
    plan.log_sparsity.push_back(ls);
    if (std::isfinite(ls)) max_finite = std::max(max_finite, ls);
  }
  std::vector<double> weights;
  weights.reserve(seeds.size());
  for (double ls : plan.log_sparsity) {
    // Zero-radius balls share the top finite weight, exp(0) = 1.
    weights.push_back(std::isfinite(ls) ? std::exp(ls - max_finite) : 1.0);
  }
  plan.quotas = ApportionLargestRemainder(weights, deficit);
  return plan;
}

std::vector<double> SynthesizeInBall(const GranularBall& gb, std::size_t quota,
                                     const Dataset& d,
                                     const SynthesisConfig& cfg,
                                     int target_class, DistanceOrder p,
                                     std::vector<SynthesisDraw>* trace) {
  if (!(cfg.sigma_scale > 0.0)) {
    throw ContractError("sigma_scale must be positive");
  }
  std::vector<std::size_t> targets;
  for (std::size_t i : gb.members) {
    if (d.label(i) == target_class) targets.push_back(i);
  }
  if (targets.empty()) {
    throw ContractError("seed ball has no member of the target class");
  }
  const std::size_t n = d.num_features();
  std::vector<double> out;
  if (quota == 0) return out;
  out.reserve(quota * n);

  std::vector<double> phi;
  phi.reserve(targets.size());
  for (std::size_t i : targets) phi.push_back(InstanceStat(gb, i, d, p));

  const double root_n = std::sqrt(static_cast<double>(n));
  Rng rng(cfg.seed);
  std::vector<double> pair_center(n);
  std::vector<double> z(n);
  for (std::size_t s = 0; s < quota; ++s) {
    const std::size_t a = s % targets.size();
    std::size_t b = a;
    if (targets.size() > 1) {
      b = rng.UniformIndex(targets.size() - 1);
      if (b >= a) ++b;
    }
    const auto xi = d.row(targets[a]);
    const auto xj = d.row(targets[b]);
    double wi = 0.5;
    if (!cfg.uniform_pair_weights && phi[a] + phi[b] > 0.0) {
      wi = phi[a] / (phi[a] + phi[b]);
    }
    for (std::size_t j = 0; j < n; ++j) {
      pair_center[j] = wi * xi[j] + (1.0 - wi) * xj[j];
    }
    const double pair_radius = wi * MinkowskiDistance(xi, pair_center, p) +
                               (1.0 - wi) * MinkowskiDistance(xj, pair_center, p);
    const double sigma =
        cfg.sigma_scale *
        (pair_radius > 0.0 ? pair_radius : gb.radius / 10.0) / root_n;

    bool accepted = false;
    for (int attempt = 0; attempt <= cfg.max_rejects && !accepted;
         ++attempt) {
      for (std::size_t j = 0; j < n; ++j) {
        z[j] = pair_center[j] + sigma * rng.Normal();
      }
      accepted = MinkowskiDistance(z, gb.center, p) <= gb.support_radius;
      if (trace != nullptr) {
        trace->push_back({pair_center, sigma, z, accepted});
      }
    }
    if (!accepted) {
      // Pull the last draw back onto (just inside) the support sphere.
      const double dist = MinkowskiDistance(z, gb.center, p);
      const double scale =
          dist > 0.0 ? gb.support_radius / dist * (1.0 - 1e-12) : 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        z[j] = gb.center[j] + (z[j] - gb.center[j]) * scale;
      }
    }
    out.insert(out.end(), z.begin(), z.end());
  }
  return out;
}

IngbResult IngbOversample(const Dataset& d, const IngbConfig& cfg) {
  const auto counts = d.ClassCounts();
  const auto present = std::count_if(counts.begin(), counts.end(),
                                     [](std::size_t c) { return c > 0; });
  if (present < 2) {
    throw ContractError("oversampling needs at least two populated classes");
  }
  const int largest = d.LargestClass();
  const std::size_t target_count = counts[largest];
  const std::size_t n = d.num_features();
  const DistanceOrder p = cfg.split.p;

  IngbResult result{d, BuildBalls(d, cfg.split), {}, {}};
  std::vector<double> new_features;
  std::vector<int> new_labels;

  for (int c = 0; c < static_cast<int>(counts.size()); ++c) {
    if (c == largest || counts[c] == 0 || counts[c] >= target_count) continue;
    IngbRound round;
    round.target_class = c;
    round.deficit = target_count - counts[c];
    const std::uint64_t round_seed = Rng::Derive(cfg.synthesis.seed, c);

    std::vector<GranularBall> candidates;
    for (std::size_t b = 0; b < result.balls.size(); ++b) {
      if (result.balls[b].label != c) continue;
      round.candidate_balls.push_back(b);
      candidates.push_back(result.balls[b]);
      round.entropies.push_back(BallEntropy(result.balls[b], d, p));
    }

    if (candidates.empty()) {
      // No ball carries the label: jitter real rows of the class with a
      // spread of 1% of each feature's range.
      round.fallback = true;
      std::vector<double> lo(d.row(0).begin(), d.row(0).end());
      std::vector<double> hi = lo;
      for (std::size_t i = 1; i < d.num_rows(); ++i) {
        const auto x = d.row(i);
        for (std::size_t j = 0; j < n; ++j) {
          lo[j] = std::min(lo[j], x[j]);
          hi[j] = std::max(hi[j], x[j]);
        }
      }
      const auto members = d.IndicesOfClass(c);
      Rng rng(round_seed);
      for (std::size_t s = 0; s < round.deficit; ++s) {
        const auto x = d.row(members[rng.UniformIndex(members.size())]);
        for (std::size_t j = 0; j < n; ++j) {
          new_features.push_back(x[j] + 0.01 * (hi[j] - lo[j]) * rng.Normal());
        }
        new_labels.push_back(c);
        result.synthetic_sources.push_back(-1);
      }
      round.plan.target_class = c;
      round.plan.deficit = round.deficit;
      result.rounds.push_back(std::move(round));
      continue;
    }

    const auto picked = SelectSeeds(round.entropies, cfg.seed_threshold);
    std::vector<GranularBall> seeds;
    std::vector<std::size_t> seed_ids;
    for (std::size_t s : picked) {
      seeds.push_back(candidates[s]);
      seed_ids.push_back(round.candidate_balls[s]);
    }
    round.plan = Allocate(seeds, seed_ids, d, round.deficit, c,
                          cfg.sparsity_exponent);
    for (std::size_t s = 0; s < seeds.size(); ++s) {
      const std::size_t quota = round.plan.quotas[s];
      if (quota == 0) continue;
      SynthesisConfig ball_cfg = cfg.synthesis;
      ball_cfg.seed = Rng::Derive(round_seed, seed_ids[s]);
      const auto rows = SynthesizeInBall(seeds[s], quota, d, ball_cfg, c, p);
      new_features.insert(new_features.end(), rows.begin(), rows.end());
      new_labels.insert(new_labels.end(), quota, c);
      result.synthetic_sources.insert(result.synthetic_sources.end(), quota,
                                      static_cast<long>(seed_ids[s]));
    }
    result.rounds.push_back(std::move(round));
  }

  if (!new_labels.empty()) result.data = d.Append(new_features, new_labels);
  return result;
}

}  // namespace ingb
