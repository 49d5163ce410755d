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

#include "ingb/granular.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <ostream>
#include <utility>

#include "ingb/errors.h"
#include "json.hpp"

namespace ingb {
namespace {

std::vector<double> MeanOf(const Dataset& d,
                           const std::vector<std::size_t>& members) {
  std::vector<double> mean(d.num_features(), 0.0);
  for (std::size_t i : members) {
    const auto x = d.row(i);
    for (std::size_t j = 0; j < mean.size(); ++j) mean[j] += x[j];
  }
  const double inv = 1.0 / static_cast<double>(members.size());
  for (double& v : mean) v *= inv;
  return mean;
}

}  // namespace

int GranularBall::DistinctClasses() const {
  return static_cast<int>(
      std::count_if(class_counts.begin(), class_counts.end(),
                    [](std::size_t c) { return c > 0; }));
}

double GranularBall::Purity(int c) const {
  if (members.empty() || c < 0 ||
      static_cast<std::size_t>(c) >= class_counts.size()) {
    return 0.0;
  }
  return static_cast<double>(class_counts[c]) /
         static_cast<double>(members.size());
}

GranularBall MakeBall(const Dataset& d, std::vector<std::size_t> members,
                      DistanceOrder p) {
  if (members.empty()) throw ContractError("granular ball needs members");
  GranularBall gb;
  gb.members = std::move(members);
  gb.center = MeanOf(d, gb.members);
  gb.class_counts.assign(d.num_classes(), 0);
  double distance_sum = 0.0;
  for (std::size_t i : gb.members) {
    if (i >= d.num_rows()) throw ContractError("ball member out of range");
    ++gb.class_counts[d.label(i)];
    const double dist = MinkowskiDistance(d.row(i), gb.center, p);
    distance_sum += dist;
    gb.support_radius = std::max(gb.support_radius, dist);
  }
  gb.radius = distance_sum / static_cast<double>(gb.members.size());
  // Rounding can put the mean a hair above the max for near-identical rows.
  gb.radius = std::min(gb.radius, gb.support_radius);
  gb.label = static_cast<int>(
      std::max_element(gb.class_counts.begin(), gb.class_counts.end()) -
      gb.class_counts.begin());
  gb.state = static_cast<double>(gb.class_counts[gb.label]) /
             static_cast<double>(gb.members.size());
  return gb;
}

double Wcss(const Dataset& d, const std::vector<std::size_t>& members) {
  if (members.empty()) return 0.0;
  const auto mean = MeanOf(d, members);
  double sum = 0.0;
  for (std::size_t i : members) sum += SquaredEuclidean(d.row(i), mean);
  return sum;
}

bool CanSplit(const GranularBall& gb, const Dataset& d,
              const SplitConfig& cfg) {
  if (gb.terminal) return false;
  const std::size_t k = static_cast<std::size_t>(gb.DistinctClasses());
  return gb.size() >= k * (d.num_features() + 1) && gb.state < cfg.T;
}

std::vector<GranularBall> SplitBall(const GranularBall& gb, const Dataset& d,
                                    const SplitConfig& cfg,
                                    SplitTrace* trace) {
  if (!CanSplit(gb, d, cfg)) {
    throw ContractError("SplitBall called on a ball that cannot be split");
  }
  const std::size_t n = d.num_features();
  const std::size_t m = gb.size();

  std::vector<int> classes;
  for (std::size_t c = 0; c < gb.class_counts.size(); ++c) {
    if (gb.class_counts[c] > 0) classes.push_back(static_cast<int>(c));
  }
  const std::size_t k = classes.size();

  // centroids[c * n + j]
  std::vector<double> centroids(k * n, 0.0);
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::size_t> of_class;
    for (std::size_t i : gb.members) {
      if (d.label(i) == classes[c]) of_class.push_back(i);
    }
    const auto mean = MeanOf(d, of_class);
    std::copy(mean.begin(), mean.end(), centroids.begin() + c * n);
  }
  auto centroid = [&](std::size_t c) {
    return std::span<const double>(centroids.data() + c * n, n);
  };

  std::vector<std::size_t> assignment(m, k);
  std::vector<std::size_t> sizes(k, 0);
  std::vector<double> assigned_distance(m, 0.0);
  double previous = std::numeric_limits<double>::infinity();
  if (trace != nullptr) trace->parent_wcss = Wcss(d, gb.members);

  for (int iter = 0; iter < cfg.max_lloyd_iters; ++iter) {
    bool changed = false;
    std::fill(sizes.begin(), sizes.end(), 0);
    for (std::size_t a = 0; a < m; ++a) {
      const auto x = d.row(gb.members[a]);
      std::size_t best = 0;
      double best_distance = SquaredEuclidean(x, centroid(0));
      for (std::size_t c = 1; c < k; ++c) {
        const double dist = SquaredEuclidean(x, centroid(c));
        if (dist < best_distance) {
          best_distance = dist;
          best = c;
        }
      }
      if (assignment[a] != best) changed = true;
      assignment[a] = best;
      assigned_distance[a] = best_distance;
      ++sizes[best];
    }
    if (trace != nullptr) trace->distance_evaluations.push_back(m * k);

    // Reseed empty clusters with the member farthest from its centroid,
    // taken from a cluster that can spare it.
    for (std::size_t c = 0; c < k; ++c) {
      if (sizes[c] > 0) continue;
      std::size_t far = m;
      for (std::size_t a = 0; a < m; ++a) {
        if (sizes[assignment[a]] < 2) continue;
        if (far == m || assigned_distance[a] > assigned_distance[far]) far = a;
      }
      --sizes[assignment[far]];
      assignment[far] = c;
      assigned_distance[far] = 0.0;
      ++sizes[c];
      changed = true;
      const auto x = d.row(gb.members[far]);
      std::copy(x.begin(), x.end(), centroids.begin() + c * n);
      if (trace != nullptr) ++trace->reseeds;
    }

    std::fill(centroids.begin(), centroids.end(), 0.0);
    for (std::size_t a = 0; a < m; ++a) {
      const auto x = d.row(gb.members[a]);
      double* c = centroids.data() + assignment[a] * n;
      for (std::size_t j = 0; j < n; ++j) c[j] += x[j];
    }
    for (std::size_t c = 0; c < k; ++c) {
      const double inv = 1.0 / static_cast<double>(sizes[c]);
      for (std::size_t j = 0; j < n; ++j) centroids[c * n + j] *= inv;
    }

    double wcss = 0.0;
    for (std::size_t a = 0; a < m; ++a) {
      wcss += SquaredEuclidean(d.row(gb.members[a]), centroid(assignment[a]));
    }
    if (trace != nullptr) trace->wcss.push_back(wcss);

    if (!changed && iter > 0) break;
    if (previous - wcss < cfg.tol) break;
    previous = wcss;
  }

  std::vector<std::vector<std::size_t>> parts(k);
  for (std::size_t a = 0; a < m; ++a) {
    parts[assignment[a]].push_back(gb.members[a]);
  }
  std::vector<GranularBall> out;
  out.reserve(k);
  for (auto& part : parts) out.push_back(MakeBall(d, std::move(part), cfg.p));
  return out;
}

std::vector<GranularBall> BuildBalls(const Dataset& d, const SplitConfig& cfg,
                                     BuildStats* stats) {
  if (!(cfg.T > 0.0 && cfg.T <= 1.0)) {
    throw ContractError("state bound T must lie in (0, 1]");
  }
  std::vector<std::size_t> all(d.num_rows());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  std::deque<GranularBall> pending;
  pending.push_back(MakeBall(d, std::move(all), cfg.p));
  std::vector<GranularBall> done;
  while (!pending.empty()) {
    GranularBall gb = std::move(pending.front());
    pending.pop_front();
    if (!CanSplit(gb, d, cfg)) {
      done.push_back(std::move(gb));
      continue;
    }
    SplitTrace trace;
    std::vector<GranularBall> subs = SplitBall(gb, d, cfg, &trace);
    if (stats != nullptr) {
      stats->lloyd_iterations += trace.wcss.size();
      for (std::size_t e : trace.distance_evaluations) {
        stats->distance_evaluations += e;
        stats->max_pass_evaluations = std::max(stats->max_pass_evaluations, e);
      }
    }
    const bool replicated =
        std::any_of(subs.begin(), subs.end(), [&](const GranularBall& s) {
          return s.size() == gb.size();
        });
    if (replicated || !(trace.wcss.back() < trace.parent_wcss)) {
      gb.terminal = true;
      if (stats != nullptr) ++stats->terminal_marks;
      done.push_back(std::move(gb));
      continue;
    }
    if (stats != nullptr) {
      ++stats->splits;
      stats->split_sizes.emplace_back(gb.size(), gb.DistinctClasses());
    }
    for (auto& s : subs) pending.push_back(std::move(s));
  }
  return done;
}

void WriteBallDump(std::ostream& out, const std::vector<GranularBall>& balls,
                   const Dataset& d) {
  for (const auto& gb : balls) {
    nlohmann::json j;
    j["center"] = gb.center;
    j["radius"] = gb.radius;
    j["support_radius"] = gb.support_radius;
    j["label"] = d.class_names()[gb.label];
    j["state"] = gb.state;
    j["size"] = gb.size();
    j["terminal"] = gb.terminal;
    out << j.dump() << '\n';
  }
}

}  // namespace ingb
