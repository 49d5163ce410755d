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

#include "ingb/cli.h"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ingb/baselines.h"
#include "ingb/dataset.h"
#include "ingb/errors.h"
#include "ingb/eval.h"
#include "ingb/generators.h"
#include "ingb/informed.h"
#include "ingb/random.h"
#include "json.hpp"

namespace ingb::cli {
namespace {

using nlohmann::json;

enum class Command { kNone, kResample, kNoise, kEvaluate, kBench, kGen };

struct RunConfig {
  Command command = Command::kNone;
  std::string input;
  std::string output;
  std::string label_column;
  std::string pipeline = "ingb";
  std::string pipelines = "none,smote,ingb,enn-ingb,tkl-ingb";
  std::string rates = "0,0.1,0.2,0.3";
  std::string classifiers = "knn,logreg";
  std::string generator;
  std::string ball_dump;
  std::string seed_plan;
  std::string sparsity_exponent = "n";
  std::string seed_threshold = "ge-mean";
  std::string format = "json";
  double T = 1.0;
  double p = 2.0;
  double sigma_scale = 1.0;
  double noise_rate = 0.0;
  int folds = 10;
  int jobs = 1;
  int smote_k = 5;
  std::size_t m = 1100;
  std::uint64_t seed = 42;
};

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void WriteFileAtomically(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("failed while writing '" + path + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move output into place at '" + path + "'");
  }
}

void Emit(const std::string& path, const std::string& content,
          std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    WriteFileAtomically(path, content);
  }
}

PipelineConfig MakePipelineConfig(const RunConfig& cfg) {
  if (!(cfg.T > 0.0 && cfg.T <= 1.0)) {
    throw ContractError("--T must lie in (0, 1]");
  }
  if (!(cfg.sigma_scale > 0.0)) {
    throw ContractError("--sigma-scale must be positive");
  }
  PipelineConfig pcfg;
  pcfg.seed = cfg.seed;
  pcfg.smote_k = cfg.smote_k;
  pcfg.ingb.split.T = cfg.T;
  pcfg.ingb.split.p = DistanceOrder(cfg.p);
  pcfg.ingb.synthesis.sigma_scale = cfg.sigma_scale;
  pcfg.ingb.synthesis.seed = cfg.seed;
  pcfg.ingb.sparsity_exponent = cfg.sparsity_exponent == "1"
                                    ? SparsityExponent::kOne
                                    : SparsityExponent::kDimension;
  pcfg.ingb.seed_threshold = cfg.seed_threshold == "le-mean"
                                 ? SeedThreshold::kAtMostMean
                                 : SeedThreshold::kAtLeastMean;
  return pcfg;
}

std::vector<Classifier> ParseClassifiers(const std::string& text) {
  std::vector<Classifier> out;
  for (const auto& token : SplitList(text)) {
    if (token == "knn") {
      out.push_back(Classifier::kKnn);
    } else if (token == "logreg" || token == "lr") {
      out.push_back(Classifier::kLogReg);
    } else {
      throw ContractError("unknown classifier '" + token + "'");
    }
  }
  if (out.empty()) throw ContractError("no classifiers selected");
  return out;
}

CvConfig MakeCvConfig(const RunConfig& cfg) {
  if (cfg.folds < 2) throw ContractError("--folds must be at least 2");
  CvConfig cv;
  cv.pipeline = MakePipelineConfig(cfg);
  cv.classifiers = ParseClassifiers(cfg.classifiers);
  cv.jobs = cfg.jobs;
  cv.seed = cfg.seed;
  return cv;
}

void CheckNoiseRate(double rate) {
  if (!(rate >= 0.0 && rate <= kMaxNoiseRate)) {
    throw ContractError("--noise-rate must lie in [0, 0.3], got " +
                        FormatDouble(rate));
  }
}

json ClassCountsJson(const Dataset& d) {
  json j = json::object();
  const auto counts = d.ClassCounts();
  for (std::size_t c = 0; c < counts.size(); ++c) {
    j[d.class_names()[c]] = counts[c];
  }
  return j;
}

json RoundsJson(const std::vector<IngbRound>& rounds, const Dataset& d) {
  json out = json::array();
  for (const auto& r : rounds) {
    json j;
    j["class"] = d.class_names()[r.target_class];
    j["deficit"] = r.deficit;
    j["candidate_balls"] = r.candidate_balls.size();
    j["fallback"] = r.fallback;
    j["seed_balls"] = r.plan.ball_ids;
    j["quotas"] = r.plan.quotas;
    j["log_sparsity"] = r.plan.log_sparsity;
    out.push_back(std::move(j));
  }
  return out;
}

int CmdResample(const RunConfig& cfg, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const Pipeline pipeline = Pipeline::Parse(cfg.pipeline);
  const PipelineConfig pcfg = MakePipelineConfig(cfg);
  const Dataset raw = LoadCsv(cfg.input, cfg.label_column);

  const ScaledDataset scaled = ScaleMinMax(raw);
  std::vector<StageReport> stages;
  const Dataset resampled = RunPipeline(scaled.data, pipeline, pcfg, &stages);

  // Filters drop rows in order and oversamplers append, so each surviving
  // real row can be traced back to its input row and written verbatim.
  std::vector<long> origin(raw.num_rows());
  std::iota(origin.begin(), origin.end(), 0L);
  for (const auto& stage : stages) {
    for (auto it = stage.removed.rbegin(); it != stage.removed.rend(); ++it) {
      origin.erase(origin.begin() + static_cast<long>(*it));
    }
    origin.resize(stage.rows_after, -1L);
  }
  std::vector<double> features;
  features.reserve(resampled.features().size());
  for (std::size_t i = 0; i < resampled.num_rows(); ++i) {
    if (origin[i] >= 0) {
      const auto x = raw.row(static_cast<std::size_t>(origin[i]));
      features.insert(features.end(), x.begin(), x.end());
    } else {
      const auto x = scaled.scaler.InverseRow(resampled.row(i));
      features.insert(features.end(), x.begin(), x.end());
    }
  }
  const Dataset output = resampled.WithFeatures(std::move(features));

  std::ostringstream csv;
  WriteCsv(csv, output, /*with_synthetic_column=*/true);
  WriteFileAtomically(cfg.output, csv.str());

  json summary;
  summary["input"] = cfg.input;
  summary["output"] = cfg.output;
  summary["pipeline"] = pipeline.ToString();
  summary["seed"] = cfg.seed;
  summary["rows_in"] = raw.num_rows();
  summary["rows_out"] = output.num_rows();
  summary["synthetic_rows"] = output.SyntheticCount();
  summary["class_counts_in"] = ClassCountsJson(raw);
  summary["class_counts_out"] = ClassCountsJson(output);
  json stage_list = json::array();
  json seed_plans = json::array();
  for (const auto& stage : stages) {
    json s;
    s["stage"] = StageName(stage.kind);
    s["rows_before"] = stage.rows_before;
    s["rows_after"] = stage.rows_after;
    if (stage.kind == StageKind::kEnn || stage.kind == StageKind::kTomek) {
      s["removed"] = stage.removed.size();
    }
    if (stage.kind == StageKind::kIngb) {
      s["balls_built"] = stage.balls_built;
      s["rounds"] = RoundsJson(stage.rounds, output);
      seed_plans = s["rounds"];
      if (!cfg.ball_dump.empty()) {
        std::ostringstream dump;
        WriteBallDump(dump, stage.balls, output);
        WriteFileAtomically(cfg.ball_dump, dump.str());
      }
    }
    stage_list.push_back(std::move(s));
  }
  summary["stages"] = std::move(stage_list);
  if (!cfg.seed_plan.empty()) {
    WriteFileAtomically(cfg.seed_plan, seed_plans.dump(2) + "\n");
  }
  summary["runtime_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  out << summary.dump(2) << '\n';
  return kExitOk;
}

int CmdNoise(const RunConfig& cfg, std::ostream& out) {
  CheckNoiseRate(cfg.noise_rate);
  const Dataset raw = LoadCsv(cfg.input, cfg.label_column);
  const NoisyDataset noisy = InjectLabelNoise(raw, {cfg.noise_rate, cfg.seed});

  std::ostringstream csv;
  WriteCsv(csv, noisy.data, /*with_synthetic_column=*/false);

  json sidecar;
  sidecar["input"] = cfg.input;
  sidecar["rate"] = cfg.noise_rate;
  sidecar["seed"] = cfg.seed;
  sidecar["count"] = noisy.flipped.size();
  sidecar["flipped"] = noisy.flipped;
  json per_class = json::object();
  for (const auto& name : raw.class_names()) per_class[name] = 0;
  for (std::size_t i : noisy.flipped) {
    per_class[raw.class_names()[raw.label(i)]] =
        per_class[raw.class_names()[raw.label(i)]].get<std::size_t>() + 1;
  }
  sidecar["flipped_from_class"] = per_class;

  WriteFileAtomically(cfg.output, csv.str());
  WriteFileAtomically(cfg.output + ".flips.json", sidecar.dump(2) + "\n");
  out << sidecar["count"].get<std::size_t>() << " labels flipped\n";
  return kExitOk;
}

int CmdEvaluate(const RunConfig& cfg, std::ostream& out) {
  CheckNoiseRate(cfg.noise_rate);
  const Pipeline pipeline = Pipeline::Parse(cfg.pipeline);
  const CvConfig cv = MakeCvConfig(cfg);
  Dataset d = LoadCsv(cfg.input, cfg.label_column);
  if (cfg.noise_rate > 0.0) {
    d = InjectLabelNoise(d, {cfg.noise_rate, Rng::Derive(cfg.seed, 0)}).data;
  }
  const FoldPlan folds =
      StratifiedFolds(d, cfg.folds, Rng::Derive(cfg.seed, 1));
  const CvReport report = CrossValidate(d, pipeline, folds, cv);
  if (cfg.format == "csv") {
    Emit(cfg.output, report.ToCsv(), out);
  } else {
    json j = report.ToJson();
    j["input"] = cfg.input;
    j["noise_rate"] = cfg.noise_rate;
    Emit(cfg.output, j.dump(2) + "\n", out);
  }
  return kExitOk;
}

int CmdBench(const RunConfig& cfg, std::ostream& out) {
  std::vector<double> rates;
  for (const auto& token : SplitList(cfg.rates)) {
    double r = 0.0;
    try {
      std::size_t used = 0;
      r = std::stod(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw ContractError("invalid noise rate '" + token + "'");
    }
    CheckNoiseRate(r);
    rates.push_back(r);
  }
  std::vector<Pipeline> pipelines;
  for (const auto& token : SplitList(cfg.pipelines)) {
    pipelines.push_back(Pipeline::Parse(token));
  }
  if (rates.empty() || pipelines.empty()) {
    throw ContractError("bench needs at least one rate and one pipeline");
  }
  const CvConfig cv = MakeCvConfig(cfg);
  const Dataset d = LoadCsv(cfg.input, cfg.label_column);

  std::ostringstream csv;
  csv << "noise_rate,pipeline,classifier,metric,mean,std\n";
  for (std::size_t r = 0; r < rates.size(); ++r) {
    const Dataset noisy =
        InjectLabelNoise(d, {rates[r], Rng::Derive(cfg.seed, 2 * r)}).data;
    const FoldPlan folds =
        StratifiedFolds(noisy, cfg.folds, Rng::Derive(cfg.seed, 2 * r + 1));
    for (const auto& pipeline : pipelines) {
      const CvReport report = CrossValidate(noisy, pipeline, folds, cv);
      for (std::size_t c = 0; c < cv.classifiers.size(); ++c) {
        for (std::size_t k = 0; k < MetricsReport::kNames.size(); ++k) {
          csv << FormatDouble(rates[r]) << ',' << pipeline.ToString() << ','
              << ClassifierName(cv.classifiers[c]) << ','
              << MetricsReport::kNames[k] << ','
              << FormatDouble(report.summary[c].mean[k]) << ','
              << FormatDouble(report.summary[c].stddev[k]) << '\n';
        }
      }
    }
  }
  Emit(cfg.output, csv.str(), out);
  return kExitOk;
}

int CmdGen(const RunConfig& cfg, std::ostream& out) {
  const Dataset d = GenerateDataset(cfg.generator, cfg.m, cfg.seed);
  std::ostringstream csv;
  WriteCsv(csv, d, /*with_synthetic_column=*/false);
  Emit(cfg.output, csv.str(), out);
  return kExitOk;
}

void AddSeed(CLI::App* app, RunConfig& cfg) {
  app->add_option("--seed", cfg.seed, "Root RNG seed")->capture_default_str();
}

void AddLabel(CLI::App* app, RunConfig& cfg) {
  app->add_option("--label", cfg.label_column,
                  "Label column name (default: last column)");
}

void AddIngbOptions(CLI::App* app, RunConfig& cfg) {
  app->add_option("--T", cfg.T, "Granular-ball state lower bound in (0, 1]")
      ->capture_default_str();
  app->add_option("--p", cfg.p, "Minkowski distance order (>= 1)")
      ->capture_default_str();
  app->add_option("--sigma-scale", cfg.sigma_scale,
                  "Scale of the Gaussian spread around each pair")
      ->capture_default_str();
  app->add_option("--sparsity-exponent", cfg.sparsity_exponent,
                  "Exponent on |GB| in the sparsity numerator")
      ->check(CLI::IsMember({"n", "1"}))
      ->capture_default_str();
  app->add_option("--seed-threshold", cfg.seed_threshold,
                  "Seed balls have entropy at least / at most the mean")
      ->check(CLI::IsMember({"ge-mean", "le-mean"}))
      ->capture_default_str();
  app->add_option("--smote-k", cfg.smote_k, "SMOTE neighbour count")
      ->capture_default_str();
}

void AddEvalOptions(CLI::App* app, RunConfig& cfg) {
  app->add_option("--folds", cfg.folds, "Stratified folds")
      ->capture_default_str();
  app->add_option("--jobs", cfg.jobs, "Folds evaluated concurrently")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--classifiers", cfg.classifiers,
                  "Comma-separated subset of knn,logreg")
      ->capture_default_str();
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"ingb: granular-ball informed oversampling toolkit"};
  app.require_subcommand(1);

  auto* resample = app.add_subcommand("resample", "Balance a CSV dataset");
  resample->add_option("--in", cfg.input, "Input CSV")->required();
  resample->add_option("--out", cfg.output, "Output CSV")->required();
  resample->add_option("--pipeline", cfg.pipeline,
                       "Dash-separated stages, e.g. enn-ingb")
      ->capture_default_str();
  resample->add_option("--ball-dump", cfg.ball_dump,
                       "Write granular balls as JSON lines");
  resample->add_option("--seed-plan", cfg.seed_plan,
                       "Write per-class seed plans as JSON");
  AddSeed(resample, cfg);
  AddLabel(resample, cfg);
  AddIngbOptions(resample, cfg);
  resample->callback([&] { cfg.command = Command::kResample; });

  auto* noise = app.add_subcommand("noise", "Flip a fraction of labels");
  noise->add_option("--in", cfg.input, "Input CSV")->required();
  noise->add_option("--out", cfg.output, "Output CSV")->required();
  noise->add_option("--noise-rate", cfg.noise_rate, "Rate in [0, 0.3]")
      ->required();
  AddSeed(noise, cfg);
  AddLabel(noise, cfg);
  noise->callback([&] { cfg.command = Command::kNoise; });

  auto* evaluate =
      app.add_subcommand("evaluate", "Stratified cross-validation report");
  evaluate->add_option("--in", cfg.input, "Input CSV")->required();
  evaluate->add_option("--out", cfg.output, "Report path (default stdout)");
  evaluate->add_option("--pipeline", cfg.pipeline, "Resampling pipeline")
      ->capture_default_str();
  evaluate->add_option("--noise-rate", cfg.noise_rate,
                       "Label noise injected before splitting")
      ->capture_default_str();
  evaluate->add_option("--format", cfg.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  AddSeed(evaluate, cfg);
  AddLabel(evaluate, cfg);
  AddIngbOptions(evaluate, cfg);
  AddEvalOptions(evaluate, cfg);
  evaluate->callback([&] { cfg.command = Command::kEvaluate; });

  auto* bench = app.add_subcommand(
      "bench", "Noise-rate x pipeline sweep as a long-format CSV");
  bench->add_option("--in", cfg.input, "Input CSV")->required();
  bench->add_option("--out", cfg.output, "Output CSV (default stdout)");
  bench->add_option("--pipelines", cfg.pipelines,
                    "Comma-separated pipelines")
      ->capture_default_str();
  bench->add_option("--rates", cfg.rates, "Comma-separated noise rates")
      ->capture_default_str();
  AddSeed(bench, cfg);
  AddLabel(bench, cfg);
  AddIngbOptions(bench, cfg);
  AddEvalOptions(bench, cfg);
  bench->callback([&] { cfg.command = Command::kBench; });

  auto* gen = app.add_subcommand("gen", "Write a synthetic benchmark CSV");
  gen->add_option("generator", cfg.generator,
                  "blobs2, blobs3, ring or highdim")
      ->required();
  gen->add_option("--m", cfg.m, "Number of rows")->capture_default_str();
  gen->add_option("--out", cfg.output, "Output CSV (default stdout)");
  AddSeed(gen, cfg);
  gen->callback([&] { cfg.command = Command::kGen; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "ingb: " << e.what() << '\n';
    return kExitContract;
  }

  try {
    switch (cfg.command) {
      case Command::kResample:
        return CmdResample(cfg, out);
      case Command::kNoise:
        return CmdNoise(cfg, out);
      case Command::kEvaluate:
        return CmdEvaluate(cfg, out);
      case Command::kBench:
        return CmdBench(cfg, out);
      case Command::kGen:
        return CmdGen(cfg, out);
      case Command::kNone:
        break;
    }
    err << app.help();
    return kExitContract;
  } catch (const ContractError& e) {
    err << "ingb: " << e.what() << '\n';
    return kExitContract;
  } catch (const IoError& e) {
    err << "ingb: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "ingb: internal error: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace ingb::cli
