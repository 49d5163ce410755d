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

#include "ingb/eval.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "ingb/errors.h"
#include "ingb/neighbors.h"
#include "ingb/random.h"

namespace ingb {
namespace {

double Sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double Score(std::span<const double> weights, const double* x, std::size_t n) {
  double z = weights[n];
  for (std::size_t j = 0; j < n; ++j) z += weights[j] * x[j];
  return z;
}

double Ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0
                  : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

std::vector<int> KnnPredict(const Dataset& train, const Dataset& test, int k) {
  if (k < 1) throw ContractError("KNN needs k >= 1");
  if (train.num_features() != test.num_features()) {
    throw ContractError("KNN train/test dimension mismatch");
  }
  std::vector<int> out;
  out.reserve(test.num_rows());
  std::vector<int> votes(train.num_classes(), 0);
  for (std::size_t i = 0; i < test.num_rows(); ++i) {
    const auto nn =
        NearestNeighbors(train, test.row(i), static_cast<std::size_t>(k));
    std::fill(votes.begin(), votes.end(), 0);
    for (std::size_t j : nn) ++votes[train.label(j)];
    const int top = *std::max_element(votes.begin(), votes.end());
    int predicted = train.label(nn.front());
    for (std::size_t j : nn) {
      if (votes[train.label(j)] == top) {
        predicted = train.label(j);
        break;
      }
    }
    out.push_back(predicted);
  }
  return out;
}

double LogisticRegression::Loss(std::span<const double> weights,
                                std::span<const double> x, std::size_t n,
                                std::span<const double> targets) {
  const std::size_t m = targets.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double z = Score(weights, x.data() + i * n, n);
    // log(1 + e^z) - y z, evaluated without overflow.
    sum += std::max(z, 0.0) + std::log1p(std::exp(-std::abs(z))) -
           targets[i] * z;
  }
  return sum / static_cast<double>(m);
}

std::vector<double> LogisticRegression::Gradient(
    std::span<const double> weights, std::span<const double> x, std::size_t n,
    std::span<const double> targets) {
  const std::size_t m = targets.size();
  std::vector<double> grad(n + 1, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    const double* row = x.data() + i * n;
    const double residual = Sigmoid(Score(weights, row, n)) - targets[i];
    for (std::size_t j = 0; j < n; ++j) grad[j] += residual * row[j];
    grad[n] += residual;
  }
  const double inv = 1.0 / static_cast<double>(m);
  for (double& g : grad) g *= inv;
  return grad;
}

void LogisticRegression::Fit(const Dataset& train,
                             const LogisticOptions& options) {
  scaler_ = MinMaxScaler::Fit(train);
  num_features_ = train.num_features();
  num_classes_ = train.num_classes();
  const Dataset scaled = scaler_.Transform(train);
  const auto x = scaled.features();
  const std::size_t n = num_features_;
  const std::size_t m = train.num_rows();

  std::vector<int> positives;
  if (num_classes_ == 2) {
    positives = {1};
  } else {
    positives.resize(num_classes_);
    std::iota(positives.begin(), positives.end(), 0);
  }
  models_.clear();
  std::vector<double> targets(m);
  for (int positive : positives) {
    for (std::size_t i = 0; i < m; ++i) {
      targets[i] = train.label(i) == positive ? 1.0 : 0.0;
    }
    std::vector<double> weights(n + 1, 0.0);
    for (int epoch = 0; epoch < options.epochs; ++epoch) {
      const auto grad = Gradient(weights, x, n, targets);
      for (std::size_t j = 0; j <= n; ++j) {
        weights[j] -= options.learning_rate * grad[j];
      }
    }
    models_.push_back(std::move(weights));
  }
}

std::vector<int> LogisticRegression::Predict(const Dataset& test) const {
  if (models_.empty()) throw ContractError("logistic model is not fitted");
  if (test.num_features() != num_features_) {
    throw ContractError("logistic model dimension mismatch");
  }
  const Dataset scaled = scaler_.Transform(test);
  const std::size_t n = num_features_;
  std::vector<int> out;
  out.reserve(test.num_rows());
  for (std::size_t i = 0; i < test.num_rows(); ++i) {
    const double* row = scaled.features().data() + i * n;
    if (num_classes_ == 2) {
      out.push_back(Score(models_[0], row, n) >= 0.0 ? 1 : 0);
      continue;
    }
    int best = 0;
    double best_score = Score(models_[0], row, n);
    for (std::size_t c = 1; c < models_.size(); ++c) {
      const double s = Score(models_[c], row, n);
      if (s > best_score) {
        best_score = s;
        best = static_cast<int>(c);
      }
    }
    out.push_back(best);
  }
  return out;
}

std::vector<int> LogRegFitPredict(const Dataset& train, const Dataset& test,
                                  const LogisticOptions& options) {
  LogisticRegression model;
  model.Fit(train, options);
  return model.Predict(test);
}

ConfusionCounts CountConfusion(std::span<const int> truth,
                               std::span<const int> predicted,
                               int positive_class) {
  if (truth.size() != predicted.size()) {
    throw ContractError("truth and prediction lengths differ");
  }
  ConfusionCounts c;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const bool actual = truth[i] == positive_class;
    const bool guess = predicted[i] == positive_class;
    if (actual && guess) {
      ++c.tp;
    } else if (actual) {
      ++c.fn;
    } else if (guess) {
      ++c.fp;
    } else {
      ++c.tn;
    }
  }
  return c;
}

MetricsReport MetricsFromCounts(const ConfusionCounts& c) {
  MetricsReport r;
  r.precision = Ratio(c.tp, c.tp + c.fp);
  r.recall = Ratio(c.tp, c.tp + c.fn);
  r.specificity = Ratio(c.tn, c.tn + c.fp);
  // F-measure at beta = 1.
  r.f1 = r.precision + r.recall > 0.0
             ? 2.0 * r.precision * r.recall / (r.precision + r.recall)
             : 0.0;
  r.auc_balanced = (r.recall + r.specificity) / 2.0;
  r.g_mean = std::sqrt(r.recall * r.specificity);
  return r;
}

MetricsReport ComputeMetrics(std::span<const int> truth,
                             std::span<const int> predicted,
                             int positive_class, std::size_t num_classes) {
  if (truth.empty()) throw ContractError("cannot score an empty prediction");
  if (truth.size() != predicted.size()) {
    throw ContractError("truth and prediction lengths differ");
  }
  if (num_classes == 2) {
    return MetricsFromCounts(CountConfusion(truth, predicted, positive_class));
  }
  std::vector<bool> present(num_classes, false);
  for (int y : truth) present.at(static_cast<std::size_t>(y)) = true;
  MetricsReport macro;
  macro.macro = true;
  int classes = 0;
  for (std::size_t c = 0; c < num_classes; ++c) {
    if (!present[c]) continue;
    const MetricsReport r = MetricsFromCounts(
        CountConfusion(truth, predicted, static_cast<int>(c)));
    macro.precision += r.precision;
    macro.recall += r.recall;
    macro.f1 += r.f1;
    macro.specificity += r.specificity;
    macro.auc_balanced += r.auc_balanced;
    macro.g_mean += r.g_mean;
    ++classes;
  }
  const double inv = 1.0 / classes;
  macro.precision *= inv;
  macro.recall *= inv;
  macro.f1 *= inv;
  macro.specificity *= inv;
  macro.auc_balanced *= inv;
  macro.g_mean *= inv;
  return macro;
}

std::string ClassifierName(Classifier c) {
  return c == Classifier::kKnn ? "knn" : "logreg";
}

nlohmann::json CvReport::ToJson() const {
  nlohmann::json j;
  j["pipeline"] = pipeline;
  j["positive_class"] = positive_class;
  j["seed"] = seed;
  j["auc_definition"] = "balanced: (recall + specificity) / 2";
  std::vector<std::string> names;
  for (Classifier c : classifiers) names.push_back(ClassifierName(c));
  j["classifiers"] = names;
  j["num_folds"] = folds.size();

  nlohmann::json per_fold = nlohmann::json::array();
  for (const auto& f : folds) {
    nlohmann::json jf;
    jf["fold"] = f.fold;
    jf["train_rows"] = f.train_rows;
    jf["resampled_rows"] = f.resampled_rows;
    jf["synthetic_rows"] = f.synthetic_rows;
    jf["test_rows"] = f.test_rows;
    for (std::size_t c = 0; c < classifiers.size(); ++c) {
      const auto values = f.metrics[c].Values();
      for (std::size_t k = 0; k < values.size(); ++k) {
        jf["metrics"][names[c]][MetricsReport::kNames[k]] = values[k];
      }
    }
    per_fold.push_back(std::move(jf));
  }
  j["per_fold"] = std::move(per_fold);

  names.push_back("average");
  for (std::size_t c = 0; c < summary.size(); ++c) {
    for (std::size_t k = 0; k < MetricsReport::kNames.size(); ++k) {
      auto& slot = j["summary"][names[c]][MetricsReport::kNames[k]];
      slot["mean"] = summary[c].mean[k];
      slot["std"] = summary[c].stddev[k];
    }
  }
  return j;
}

std::string CvReport::ToCsv() const {
  std::ostringstream out;
  out << "fold,classifier,metric,value\n";
  for (const auto& f : folds) {
    for (std::size_t c = 0; c < classifiers.size(); ++c) {
      const auto values = f.metrics[c].Values();
      for (std::size_t k = 0; k < values.size(); ++k) {
        out << f.fold << ',' << ClassifierName(classifiers[c]) << ','
            << MetricsReport::kNames[k] << ',' << FormatDouble(values[k])
            << '\n';
      }
    }
  }
  for (std::size_t c = 0; c < summary.size(); ++c) {
    const std::string name =
        c < classifiers.size() ? ClassifierName(classifiers[c]) : "average";
    for (std::size_t k = 0; k < MetricsReport::kNames.size(); ++k) {
      out << "mean," << name << ',' << MetricsReport::kNames[k] << ','
          << FormatDouble(summary[c].mean[k]) << '\n';
      out << "std," << name << ',' << MetricsReport::kNames[k] << ','
          << FormatDouble(summary[c].stddev[k]) << '\n';
    }
  }
  return out.str();
}

CvReport CrossValidate(const Dataset& d, const Pipeline& pipeline,
                       const FoldPlan& folds, const CvConfig& cfg) {
  if (folds.assignments.size() != d.num_rows()) {
    throw ContractError("fold plan does not match the dataset");
  }
  if (cfg.classifiers.empty()) throw ContractError("no classifiers selected");
  const bool binary = d.num_classes() == 2;
  const int positive = binary ? d.SmallestClass() : -1;

  CvReport report;
  report.pipeline = pipeline.ToString();
  report.positive_class = binary ? d.class_names()[positive] : "macro";
  report.seed = cfg.seed;
  report.classifiers = cfg.classifiers;
  report.folds.resize(static_cast<std::size_t>(folds.k_folds));

  auto run_fold = [&](int fold) {
    const auto test_idx = folds.TestIndices(fold);
    const auto train_idx = folds.TrainIndices(fold);
    if (test_idx.empty() || train_idx.empty()) {
      throw ContractError("fold " + std::to_string(fold) + " is empty");
    }
    {
      const std::unordered_set<std::size_t> test_set(test_idx.begin(),
                                                     test_idx.end());
      for (std::size_t i : train_idx) {
        if (test_set.count(i) != 0) {
          throw std::logic_error("train and test folds overlap");
        }
      }
    }
    const Dataset train_raw = d.Subset(train_idx);
    const Dataset test_raw = d.Subset(test_idx);
    const MinMaxScaler scaler = MinMaxScaler::Fit(train_raw);
    const Dataset train = scaler.Transform(train_raw);
    const Dataset test = scaler.Transform(test_raw);

    PipelineConfig pcfg = cfg.pipeline;
    pcfg.seed = Rng::Derive(cfg.seed, static_cast<std::uint64_t>(fold));
    const Dataset resampled = RunPipeline(train, pipeline, pcfg);
    // Resampling only ever sees the training portion.
    if (test.SyntheticCount() != 0) {
      throw std::logic_error("synthetic rows leaked into a test fold");
    }

    FoldResult result;
    result.fold = fold;
    result.train_rows = train.num_rows();
    result.resampled_rows = resampled.num_rows();
    result.synthetic_rows = resampled.SyntheticCount();
    result.test_rows = test.num_rows();
    for (Classifier c : cfg.classifiers) {
      const std::vector<int> predicted =
          c == Classifier::kKnn ? KnnPredict(resampled, test, cfg.knn_k)
                                : LogRegFitPredict(resampled, test,
                                                   cfg.logistic);
      result.metrics.push_back(
          ComputeMetrics(test.labels(), predicted, positive, d.num_classes()));
    }
    report.folds[static_cast<std::size_t>(fold)] = std::move(result);
  };

  const int jobs = std::max(1, std::min(cfg.jobs, folds.k_folds));
  if (jobs == 1) {
    for (int f = 0; f < folds.k_folds; ++f) run_fold(f);
  } else {
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (int f = next++; f < folds.k_folds; f = next++) run_fold(f);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
    for (auto& t : workers) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  // Summaries: each classifier, then the per-fold average over classifiers.
  const std::size_t nc = cfg.classifiers.size();
  const std::size_t nf = report.folds.size();
  report.summary.assign(nc + 1, MetricSummary{});
  for (std::size_t c = 0; c <= nc; ++c) {
    for (std::size_t k = 0; k < MetricsReport::kNames.size(); ++k) {
      std::vector<double> values;
      for (const auto& f : report.folds) {
        if (c < nc) {
          values.push_back(f.metrics[c].Values()[k]);
        } else {
          double sum = 0.0;
          for (const auto& m : f.metrics) sum += m.Values()[k];
          values.push_back(sum / static_cast<double>(nc));
        }
      }
      const double mean =
          std::accumulate(values.begin(), values.end(), 0.0) /
          static_cast<double>(nf);
      double ss = 0.0;
      for (double v : values) ss += (v - mean) * (v - mean);
      report.summary[c].mean[k] = mean;
      report.summary[c].stddev[k] =
          nf > 1 ? std::sqrt(ss / static_cast<double>(nf - 1)) : 0.0;
    }
  }
  return report;
}

}  // namespace ingb
