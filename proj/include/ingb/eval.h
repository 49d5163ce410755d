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

#ifndef INGB_EVAL_H_
#define INGB_EVAL_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ingb/baselines.h"
#include "ingb/dataset.h"
#include "json.hpp"

namespace ingb {

// ---------------------------------------------------------------------------
// Classifiers.

// Majority vote of the k nearest training rows (Euclidean); tied classes are
// resolved in favour of the nearest neighbour belonging to one of them.
std::vector<int> KnnPredict(const Dataset& train, const Dataset& test,
                            int k = 5);

struct LogisticOptions {
  int epochs = 500;
  double learning_rate = 0.1;
};

// Full-batch gradient descent on mean cross-entropy with a bias term, over
// features min-max scaled on the training set. Two-class tables fit one
// model for class 1; larger tables fit one-vs-rest models and take argmax.
class LogisticRegression {
 public:
  void Fit(const Dataset& train, const LogisticOptions& options = {});
  std::vector<int> Predict(const Dataset& test) const;

  // Mean cross-entropy of `weights` (n coefficients then the bias) on rows
  // `x` (row-major, n columns) against 0/1 targets.
  static double Loss(std::span<const double> weights,
                     std::span<const double> x, std::size_t n,
                     std::span<const double> targets);
  static std::vector<double> Gradient(std::span<const double> weights,
                                      std::span<const double> x,
                                      std::size_t n,
                                      std::span<const double> targets);

  // One weight vector per model (n + 1 entries each).
  const std::vector<std::vector<double>>& models() const { return models_; }

 private:
  MinMaxScaler scaler_;
  std::size_t num_features_ = 0;
  std::size_t num_classes_ = 0;
  std::vector<std::vector<double>> models_;
};

std::vector<int> LogRegFitPredict(const Dataset& train, const Dataset& test,
                                  const LogisticOptions& options = {});

// ---------------------------------------------------------------------------
// Metrics.

struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;

  std::size_t total() const { return tp + fp + tn + fn; }
};

// `auc_balanced` is (recall + specificity) / 2, not a rank-based ROC area.
struct MetricsReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double specificity = 0.0;
  double auc_balanced = 0.0;
  double g_mean = 0.0;
  bool macro = false;

  static constexpr std::array<const char*, 6> kNames = {
      "precision",   "recall",       "f1",
      "specificity", "auc_balanced", "g_mean"};
  std::array<double, 6> Values() const {
    return {precision, recall, f1, specificity, auc_balanced, g_mean};
  }
};

ConfusionCounts CountConfusion(std::span<const int> truth,
                               std::span<const int> predicted,
                               int positive_class);

// 0/0 terms are defined as 0.
MetricsReport MetricsFromCounts(const ConfusionCounts& counts);

// Binary (num_classes == 2): one-vs-rest on positive_class. Otherwise the
// macro average of one-vs-rest reports over the classes present in `truth`.
MetricsReport ComputeMetrics(std::span<const int> truth,
                             std::span<const int> predicted,
                             int positive_class, std::size_t num_classes);

// ---------------------------------------------------------------------------
// Cross-validation.

enum class Classifier { kKnn, kLogReg };

std::string ClassifierName(Classifier c);

struct CvConfig {
  PipelineConfig pipeline;
  std::vector<Classifier> classifiers = {Classifier::kKnn,
                                         Classifier::kLogReg};
  int knn_k = 5;
  LogisticOptions logistic;
  int jobs = 1;
  std::uint64_t seed = 42;
};

struct FoldResult {
  int fold = 0;
  std::size_t train_rows = 0;
  std::size_t resampled_rows = 0;
  std::size_t synthetic_rows = 0;
  std::size_t test_rows = 0;
  std::vector<MetricsReport> metrics;  // parallel to CvConfig::classifiers
};

struct MetricSummary {
  std::array<double, 6> mean{};
  std::array<double, 6> stddev{};
};

struct CvReport {
  std::string pipeline;
  std::string positive_class;  // class name, or "macro"
  std::uint64_t seed = 0;
  std::vector<Classifier> classifiers;
  std::vector<FoldResult> folds;
  // One entry per classifier, then the per-fold classifier average.
  std::vector<MetricSummary> summary;

  const MetricSummary& average() const { return summary.back(); }
  nlohmann::json ToJson() const;
  std::string ToCsv() const;
};

// Resamples each training portion with `pipeline` (features min-max scaled
// on that portion first, the same map applied to the held-out fold), fits
// every classifier, and scores the untouched held-out fold.
CvReport CrossValidate(const Dataset& d, const Pipeline& pipeline,
                       const FoldPlan& folds, const CvConfig& cfg);

}  // namespace ingb

#endif  // INGB_EVAL_H_
