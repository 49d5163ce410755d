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

#ifndef INGB_BASELINES_H_
#define INGB_BASELINES_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ingb/dataset.h"
#include "ingb/informed.h"

namespace ingb {

// Appends `deficit` SMOTE samples of target_class. Each sample is
// x_i + lambda (x_nn - x_i) with lambda ~ U(0, 1) and x_nn drawn uniformly
// from the k same-class nearest neighbours of x_i; x_i cycles over the class
// in row order. k is clipped to the class size minus one.
Dataset Smote(const Dataset& d, int k, int target_class, std::size_t deficit,
              std::uint64_t seed);

struct FilterResult {
  Dataset data;
  std::vector<std::size_t> removed;  // ascending row indices of the input
};

// Edited nearest neighbours: drops every row whose 3 nearest neighbours
// (itself excluded) vote by majority for a different class. A three-way
// split vote keeps the row.
FilterResult EnnFilter(const Dataset& d);

// Removes the majority-class member of every cross-class pair of mutual
// nearest neighbours.
FilterResult TomekFilter(const Dataset& d);

enum class StageKind { kEnn, kTomek, kSmote, kIngb };

std::string StageName(StageKind kind);

// Ordered list of cleaning and oversampling stages, written on the command
// line as a dash-separated string: "enn-ingb", "tkl-smote", "smote", "none".
class Pipeline {
 public:
  Pipeline() = default;
  explicit Pipeline(std::vector<StageKind> stages);

  // Throws ContractError naming the offending token.
  static Pipeline Parse(const std::string& text);

  const std::vector<StageKind>& stages() const { return stages_; }
  bool empty() const { return stages_.empty(); }
  bool has_oversampler() const;
  std::string ToString() const;

 private:
  std::vector<StageKind> stages_;
};

struct PipelineConfig {
  IngbConfig ingb;
  int smote_k = 5;
  std::uint64_t seed = 42;
};

struct StageReport {
  StageKind kind = StageKind::kEnn;
  std::size_t rows_before = 0;
  std::size_t rows_after = 0;
  std::vector<std::size_t> removed;
  std::size_t balls_built = 0;
  std::vector<GranularBall> balls;
  std::vector<IngbRound> rounds;
};

// Applies the stages in order. Oversampling stages raise every class to the
// largest class count.
Dataset RunPipeline(const Dataset& d, const Pipeline& pipeline,
                    const PipelineConfig& cfg,
                    std::vector<StageReport>* report = nullptr);

}  // namespace ingb

#endif  // INGB_BASELINES_H_
