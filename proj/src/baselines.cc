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

#include "ingb/baselines.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <utility>

#include "ingb/errors.h"
#include "ingb/neighbors.h"
#include "ingb/random.h"

namespace ingb {
namespace {

std::vector<std::size_t> Complement(std::size_t m,
                                    const std::vector<std::size_t>& removed) {
  std::vector<std::size_t> keep;
  keep.reserve(m - removed.size());
  std::size_t r = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (r < removed.size() && removed[r] == i) {
      ++r;
      continue;
    }
    keep.push_back(i);
  }
  return keep;
}

FilterResult Remove(const Dataset& d, std::vector<std::size_t> removed) {
  std::sort(removed.begin(), removed.end());
  removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
  if (removed.empty()) return {d, {}};
  const auto keep = Complement(d.num_rows(), removed);
  if (keep.empty()) throw ContractError("filter would remove every row");
  return {d.Subset(keep), std::move(removed)};
}

}  // namespace

Dataset Smote(const Dataset& d, int k, int target_class, std::size_t deficit,
              std::uint64_t seed) {
  if (deficit == 0) return d;
  if (k < 1) throw ContractError("SMOTE needs k >= 1");
  const auto members = d.IndicesOfClass(target_class);
  if (members.size() < 2) {
    throw ContractError("SMOTE needs at least 2 instances of class '" +
                        d.class_names().at(target_class) + "'");
  }
  const std::size_t neighbors =
      std::min(static_cast<std::size_t>(k), members.size() - 1);
  std::vector<std::vector<std::size_t>> nn(members.size());
  for (std::size_t a = 0; a < members.size(); ++a) {
    nn[a] = NearestNeighbors(d, d.row(members[a]), members, neighbors,
                             members[a]);
  }

  const std::size_t n = d.num_features();
  Rng rng(seed);
  std::vector<double> features;
  features.reserve(deficit * n);
  for (std::size_t s = 0; s < deficit; ++s) {
    const std::size_t a = s % members.size();
    const auto x = d.row(members[a]);
    const auto y = d.row(nn[a][rng.UniformIndex(nn[a].size())]);
    const double lambda = rng.Uniform();
    for (std::size_t j = 0; j < n; ++j) {
      features.push_back(x[j] + lambda * (y[j] - x[j]));
    }
  }
  const std::vector<int> labels(deficit, target_class);
  return d.Append(features, labels);
}

FilterResult EnnFilter(const Dataset& d) {
  if (d.num_rows() < 4) throw ContractError("ENN needs at least 4 rows");
  std::vector<std::size_t> removed;
  std::vector<int> votes(d.num_classes(), 0);
  for (std::size_t i = 0; i < d.num_rows(); ++i) {
    const auto nn = NearestNeighbors(d, d.row(i), 3, i);
    std::fill(votes.begin(), votes.end(), 0);
    for (std::size_t j : nn) ++votes[d.label(j)];
    const auto top = std::max_element(votes.begin(), votes.end());
    const int winners =
        static_cast<int>(std::count(votes.begin(), votes.end(), *top));
    if (winners > 1) continue;  // split vote: keep
    if (static_cast<int>(top - votes.begin()) != d.label(i)) {
      removed.push_back(i);
    }
  }
  return Remove(d, std::move(removed));
}

FilterResult TomekFilter(const Dataset& d) {
  if (d.num_rows() < 2) throw ContractError("Tomek links need at least 2 rows");
  const std::size_t m = d.num_rows();
  std::vector<std::size_t> nearest(m);
  for (std::size_t i = 0; i < m; ++i) {
    nearest[i] = NearestNeighbors(d, d.row(i), 1, i).front();
  }
  const auto counts = d.ClassCounts();
  std::vector<std::size_t> removed;
  for (std::size_t a = 0; a < m; ++a) {
    const std::size_t b = nearest[a];
    if (b <= a || nearest[b] != a) continue;
    const int la = d.label(a);
    const int lb = d.label(b);
    if (la == lb) continue;
    // The member of the larger class goes; equal counts drop the higher
    // class index.
    const bool drop_a =
        counts[la] > counts[lb] || (counts[la] == counts[lb] && la > lb);
    removed.push_back(drop_a ? a : b);
  }
  return Remove(d, std::move(removed));
}

std::string StageName(StageKind kind) {
  switch (kind) {
    case StageKind::kEnn:
      return "enn";
    case StageKind::kTomek:
      return "tkl";
    case StageKind::kSmote:
      return "smote";
    case StageKind::kIngb:
      return "ingb";
  }
  return "?";
}

Pipeline::Pipeline(std::vector<StageKind> stages) : stages_(std::move(stages)) {
  const auto oversamplers =
      std::count_if(stages_.begin(), stages_.end(), [](StageKind s) {
        return s == StageKind::kSmote || s == StageKind::kIngb;
      });
  if (oversamplers > 1) {
    throw ContractError("a pipeline may contain at most one oversampler");
  }
}

Pipeline Pipeline::Parse(const std::string& text) {
  static const std::map<std::string, StageKind> kTokens = {
      {"enn", StageKind::kEnn},     {"tkl", StageKind::kTomek},
      {"tomek", StageKind::kTomek}, {"smote", StageKind::kSmote},
      {"ingb", StageKind::kIngb}};
  if (text == "none" || text == "identity") return Pipeline();
  std::vector<StageKind> stages;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, '-')) {
    std::string lowered = token;
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    const auto it = kTokens.find(lowered);
    if (it == kTokens.end()) {
      throw ContractError("unknown pipeline stage '" + token + "' in '" +
                          text + "'");
    }
    stages.push_back(it->second);
  }
  if (stages.empty()) throw ContractError("empty pipeline string");
  return Pipeline(std::move(stages));
}

bool Pipeline::has_oversampler() const {
  return std::any_of(stages_.begin(), stages_.end(), [](StageKind s) {
    return s == StageKind::kSmote || s == StageKind::kIngb;
  });
}

std::string Pipeline::ToString() const {
  if (stages_.empty()) return "none";
  std::string out;
  for (StageKind s : stages_) {
    if (!out.empty()) out.push_back('-');
    out += StageName(s);
  }
  return out;
}

Dataset RunPipeline(const Dataset& d, const Pipeline& pipeline,
                    const PipelineConfig& cfg,
                    std::vector<StageReport>* report) {
  Dataset current = d;
  for (std::size_t s = 0; s < pipeline.stages().size(); ++s) {
    const StageKind kind = pipeline.stages()[s];
    StageReport stage;
    stage.kind = kind;
    stage.rows_before = current.num_rows();
    switch (kind) {
      case StageKind::kEnn:
      case StageKind::kTomek: {
        FilterResult filtered = kind == StageKind::kEnn
                                    ? EnnFilter(current)
                                    : TomekFilter(current);
        stage.removed = std::move(filtered.removed);
        current = std::move(filtered.data);
        break;
      }
      case StageKind::kSmote: {
        const auto counts = current.ClassCounts();
        const int largest = current.LargestClass();
        for (int c = 0; c < static_cast<int>(counts.size()); ++c) {
          // A cleaning stage can leave a class with a single row, which has
          // no neighbour to interpolate towards.
          if (c == largest || counts[c] < 2) continue;
          current = Smote(current, cfg.smote_k, c, counts[largest] - counts[c],
                          Rng::Derive(cfg.seed, static_cast<std::uint64_t>(c)));
        }
        break;
      }
      case StageKind::kIngb: {
        const auto counts = current.ClassCounts();
        if (std::count_if(counts.begin(), counts.end(),
                          [](std::size_t c) { return c > 0; }) < 2) {
          break;  // a filter emptied every class but one
        }
        IngbConfig ingb = cfg.ingb;
        ingb.synthesis.seed = cfg.seed;
        IngbResult result = IngbOversample(current, ingb);
        stage.balls_built = result.balls.size();
        stage.rounds = std::move(result.rounds);
        if (report != nullptr) stage.balls = std::move(result.balls);
        current = std::move(result.data);
        break;
      }
    }
    stage.rows_after = current.num_rows();
    if (report != nullptr) report->push_back(std::move(stage));
  }
  return current;
}

}  // namespace ingb
