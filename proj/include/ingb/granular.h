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

#ifndef INGB_GRANULAR_H_
#define INGB_GRANULAR_H_

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "ingb/dataset.h"
#include "ingb/geometry.h"

namespace ingb {

// A hypersphere summarising a subset of the dataset.
//
//   center          arithmetic mean of member rows
//   radius          mean member-to-center L_p distance
//   support_radius  max member-to-center L_p distance (containment boundary)
//   label           majority class, ties to the smaller index
//   state           fraction of members carrying `label`
struct GranularBall {
  std::vector<std::size_t> members;
  std::vector<double> center;
  double radius = 0.0;
  double support_radius = 0.0;
  int label = 0;
  double state = 1.0;
  std::vector<std::size_t> class_counts;
  bool terminal = false;

  std::size_t size() const { return members.size(); }
  // Number of classes with at least one member.
  int DistinctClasses() const;
  // Fraction of members that belong to class c.
  double Purity(int c) const;
};

struct SplitConfig {
  double T = 1.0;  // state lower bound, in (0, 1]
  DistanceOrder p;
  int max_lloyd_iters = 100;
  double tol = 1e-6;
};

// Per-split diagnostics.
struct SplitTrace {
  double parent_wcss = 0.0;
  // WCSS after each Lloyd update (and after each empty-cluster reseed).
  std::vector<double> wcss;
  // Point-to-centroid distance evaluations in each assignment pass.
  std::vector<std::size_t> distance_evaluations;
  std::size_t reseeds = 0;
};

struct BuildStats {
  std::size_t splits = 0;
  std::size_t terminal_marks = 0;
  std::size_t lloyd_iterations = 0;
  std::size_t distance_evaluations = 0;
  // Largest |ball| * k_gb seen for a single assignment pass.
  std::size_t max_pass_evaluations = 0;
  // |ball| and k_gb for every ball that was split.
  std::vector<std::pair<std::size_t, int>> split_sizes;
};

GranularBall MakeBall(const Dataset& d, std::vector<std::size_t> members,
                      DistanceOrder p);

// Within-cluster sum of squared Euclidean distances to the members' mean.
double Wcss(const Dataset& d, const std::vector<std::size_t>& members);

// |gb| >= k_gb * (n + 1), gb.state < cfg.T, and gb not terminal.
bool CanSplit(const GranularBall& gb, const Dataset& d, const SplitConfig& cfg);

// Partitions gb into k_gb nonempty sub-balls by Lloyd iteration seeded at the
// per-class means of its members.
std::vector<GranularBall> SplitBall(const GranularBall& gb, const Dataset& d,
                                    const SplitConfig& cfg,
                                    SplitTrace* trace = nullptr);

// Splits from a single all-data ball until no ball can be split. The result
// partitions the dataset's rows.
std::vector<GranularBall> BuildBalls(const Dataset& d, const SplitConfig& cfg,
                                     BuildStats* stats = nullptr);

// One JSON object per line: center, radius, support_radius, label, state,
// size. Diagnostics only.
void WriteBallDump(std::ostream& out, const std::vector<GranularBall>& balls,
                   const Dataset& d);

}  // namespace ingb

#endif  // INGB_GRANULAR_H_
