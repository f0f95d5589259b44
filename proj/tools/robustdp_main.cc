//
// Copyright 2026 The robustdp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Command-line front end.
//
//   robustdp synth     --n 1000 --d 20 [--gamma 0.1 --adversary ...] > data.csv
//   robustdp estimate  --input data.csv --method dp_robust --epsilon 1
//   robustdp sweep     --config sweep.conf --out records.csv
//   robustdp calibrate --n 2000 --d 20 --gamma 0.1 --quantile 0.95
//
// Exit codes: 0 success, 1 usage or configuration error, 2 runtime failure.
// ROBUSTDP_BASE_SEED overrides the default seed; --seed overrides both.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "robustdp/csv.h"
#include "robustdp/datagen.h"
#include "robustdp/estimators.h"
#include "robustdp/harness.h"

namespace {

using robustdp::Dataset;
using robustdp::Vector;

constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;
constexpr char kSeedEnv[] = "ROBUSTDP_BASE_SEED";

int Fail(int code, const absl::Status& status) {
  std::cerr << "robustdp: " << status.message() << "\n";
  return code;
}

// --seed, then the environment, then `fallback`.
std::optional<uint64_t> ResolveSeed(const std::optional<uint64_t>& flag,
                                    uint64_t fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kSeedEnv); env != nullptr) {
    uint64_t seed = 0;
    if (!absl::SimpleAtoi(env, &seed)) return std::nullopt;
    return seed;
  }
  return fallback;
}

nlohmann::json ToJson(const Vector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

bool WriteText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(path);
  out << text;
  return static_cast<bool>(out);
}

struct SynthArgs {
  int64_t n = 1000;
  int64_t d = 10;
  std::optional<uint64_t> seed;
  double gamma = 0.0;
  std::string adversary = "constant_cluster";
  bool fixed_count = false;
  std::string out;
  std::string plan_out;
};

int RunSynth(const SynthArgs& args) {
  const auto seed = ResolveSeed(args.seed, 0);
  if (!seed) return Fail(kExitUsage, absl::InvalidArgumentError("bad seed"));
  auto kind = robustdp::ParseAdversary(args.adversary);
  if (!kind.ok()) return Fail(kExitUsage, kind.status());
  if (args.n < 1 || args.d < 1 || !(args.gamma >= 0.0 && args.gamma < 0.5)) {
    return Fail(kExitUsage, absl::InvalidArgumentError(
                                "need n >= 1, d >= 1, gamma in [0, 0.5)"));
  }

  auto clean = robustdp::SampleGaussian(args.n, args.d,
                                        Vector::Zero(args.d), *seed);
  if (!clean.ok()) return Fail(kExitRuntime, clean.status());
  robustdp::Adversary adversary;
  adversary.kind = *kind;
  auto corrupted = robustdp::Corrupt(
      *clean, args.gamma, adversary, *seed,
      args.fixed_count ? robustdp::CorruptionCount::kFixed
                       : robustdp::CorruptionCount::kBinomial);
  if (!corrupted.ok()) return Fail(kExitRuntime, corrupted.status());

  std::ostringstream csv;
  robustdp::WriteDatasetCsv(corrupted->first, csv);
  if (!WriteText(args.out, csv.str())) {
    return Fail(kExitRuntime, absl::UnavailableError("cannot write output"));
  }
  if (!args.plan_out.empty()) {
    const robustdp::CorruptionPlan& plan = corrupted->second;
    nlohmann::json j = {
        {"gamma", plan.gamma},
        {"adversary", robustdp::AdversaryName(plan.adversary)},
        {"m_prime", plan.m_prime},
        {"replaced_indices", plan.replaced_indices},
        {"seed", *seed},
    };
    if (!WriteText(args.plan_out, j.dump() + "\n")) {
      return Fail(kExitRuntime, absl::UnavailableError("cannot write plan"));
    }
  }
  return 0;
}

struct EstimateArgs {
  std::string input;
  std::string method = "dp_robust";
  double epsilon = 1.0;
  double tau = 0.05;
  double gamma = 0.1;
  double c_thresh = 1.0;
  double alpha = 0.05;
  double range_bound = 10.0;
  std::optional<uint64_t> seed;
  bool diagnostic = false;
};

int RunEstimate(const EstimateArgs& args) {
  const auto seed = ResolveSeed(args.seed, 0);
  if (!seed) return Fail(kExitUsage, absl::InvalidArgumentError("bad seed"));
  auto method = robustdp::ParseMethod(args.method);
  if (!method.ok()) return Fail(kExitUsage, method.status());
  const robustdp::RobustConfig cfg{args.gamma, args.tau, args.c_thresh};
  const robustdp::WinsorizeConfig wcfg{args.alpha, args.range_bound};
  const robustdp::PrivacyParams params{args.epsilon, args.tau};
  if (auto s = params.Validate(); !s.ok()) return Fail(kExitUsage, s);
  if (*method == robustdp::Method::kDpRobust) {
    if (auto s = cfg.Validate(); !s.ok()) return Fail(kExitUsage, s);
  }
  if (*method == robustdp::Method::kDpWinsorized) {
    if (auto s = wcfg.Validate(); !s.ok()) return Fail(kExitUsage, s);
  }

  absl::StatusOr<Dataset> data =
      args.input == "-" ? robustdp::ReadDatasetCsv(std::cin)
                        : robustdp::ReadDatasetCsvFile(args.input);
  if (!data.ok()) return Fail(kExitRuntime, data.status());

  robustdp::EstimateOptions options;
  options.diagnostic = args.diagnostic;
  absl::StatusOr<robustdp::EstimateReport> report;
  switch (*method) {
    case robustdp::Method::kDpRobust:
      report = robustdp::DpRobustMean(*data, cfg, args.epsilon, *seed, options);
      break;
    case robustdp::Method::kDpPlain:
      report = robustdp::DpMean(*data, args.tau, args.c_thresh, args.epsilon,
                                *seed, options);
      break;
    case robustdp::Method::kDpWinsorized:
      report = robustdp::DpWinsorizedMean(*data, wcfg, params, *seed, options);
      break;
  }
  if (!report.ok()) return Fail(kExitRuntime, report.status());

  nlohmann::json params_json = {{"epsilon", args.epsilon},
                                {"tau", args.tau},
                                {"n", data->n()},
                                {"d", data->d()}};
  if (*method == robustdp::Method::kDpRobust) {
    params_json["gamma"] = args.gamma;
  } else if (*method == robustdp::Method::kDpPlain) {
    params_json["gamma"] = 1.0 / static_cast<double>(data->n());
  }
  if (*method == robustdp::Method::kDpWinsorized) {
    params_json["alpha"] = args.alpha;
    params_json["range_bound"] = args.range_bound;
  } else {
    params_json["c_thresh"] = args.c_thresh;
  }
  nlohmann::json line = {
      {"method", robustdp::MethodName(report->method)},
      {"params", params_json},
      {"release", !args.diagnostic},
      {"private_mean", ToJson(report->private_mean)},
      {"noise_variance", report->noise_variance},
      {"noise_sigma", std::sqrt(report->noise_variance)},
      {"bound_used", report->bound_used},
      {"sensitivity_used", report->sensitivity_used},
      {"seed", report->seed},
      {"warnings", report->warnings},
  };
  if (args.diagnostic) {
    nlohmann::json non_private;
    if (report->robust_mean) {
      non_private["robust_mean"] = ToJson(*report->robust_mean);
    }
    if (report->filter_diag) {
      const robustdp::FilterDiagnostics& diag = *report->filter_diag;
      non_private["filter"] = {
          {"iterations", diag.iterations},
          {"removed_indices", diag.removed_indices},
          {"final_spectral_deviation", diag.final_spectral_deviation},
          {"threshold", diag.threshold},
          {"terminated_by",
           robustdp::TerminationReasonName(diag.terminated_by)},
      };
    }
    line["non_private"] = non_private;
  }
  std::cout << line.dump() << "\n";
  for (const std::string& w : report->warnings) {
    std::cerr << "robustdp: warning: " << w << "\n";
  }
  return 0;
}

struct SweepArgs {
  std::string config;
  std::string out;
  std::string summary;
  std::optional<uint64_t> seed;
};

int RunSweepCommand(const SweepArgs& args) {
  std::ifstream in(args.config);
  if (!in) {
    return Fail(kExitUsage, absl::NotFoundError("cannot open " + args.config));
  }
  std::stringstream text;
  text << in.rdbuf();
  auto config = robustdp::ParseExperimentConfig(text.str());
  if (!config.ok()) return Fail(kExitUsage, config.status());
  const auto seed = ResolveSeed(args.seed, config->base_seed);
  if (!seed) return Fail(kExitUsage, absl::InvalidArgumentError("bad seed"));
  config->base_seed = *seed;

  auto records = robustdp::RunSweep(*config);
  if (!records.ok()) return Fail(kExitRuntime, records.status());
  if (!WriteText(args.out, robustdp::RecordsToCsv(*records))) {
    return Fail(kExitRuntime, absl::UnavailableError("cannot write records"));
  }
  if (!args.summary.empty()) {
    const robustdp::ExcessTable table = robustdp::ExcessErrorTable(*records);
    for (const std::string& w : table.warnings) {
      std::cerr << "robustdp: warning: " << w << "\n";
    }
    if (!WriteText(args.summary, robustdp::ExcessTableToCsv(table))) {
      return Fail(kExitRuntime, absl::UnavailableError("cannot write summary"));
    }
  }
  for (const robustdp::TrialRecord& r : *records) {
    if (!r.error.empty()) {
      std::cerr << "robustdp: trial failed (" << robustdp::MethodName(r.method)
                << " n=" << r.n << " d=" << r.d << " trial=" << r.trial
                << "): " << r.error << "\n";
    }
  }
  return 0;
}

struct CalibrateArgs {
  int64_t n = 2000;
  int64_t d = 20;
  double gamma = 0.1;
  double quantile = 0.95;
  int trials = 100;
  std::optional<uint64_t> seed;
};

int RunCalibrate(const CalibrateArgs& args) {
  const auto seed = ResolveSeed(args.seed, 0);
  if (!seed) return Fail(kExitUsage, absl::InvalidArgumentError("bad seed"));
  if (!(args.gamma > 0.0 && args.gamma < 0.5) ||
      !(args.quantile >= 0.5 && args.quantile < 1.0) || args.trials < 1 ||
      args.n < 2 || args.d < 1) {
    return Fail(kExitUsage, absl::InvalidArgumentError(
                                "invalid calibration parameters"));
  }
  auto result = robustdp::CalibrateC(args.n, args.d, args.gamma, args.quantile,
                                     args.trials, *seed);
  if (!result.ok()) return Fail(kExitRuntime, result.status());
  for (const std::string& w : result->warnings) {
    std::cerr << "robustdp: warning: " << w << "\n";
  }
  std::cout << robustdp::FormatDouble(result->c_thresh) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differentially private robust mean estimation"};
  app.require_subcommand(1);

  SynthArgs synth;
  CLI::App* synth_cmd = app.add_subcommand("synth", "Generate a dataset CSV");
  synth_cmd->add_option("--n", synth.n, "Number of samples");
  synth_cmd->add_option("--d", synth.d, "Dimension");
  synth_cmd->add_option("--seed", synth.seed, "Seed");
  synth_cmd->add_option("--gamma", synth.gamma, "Corruption fraction");
  synth_cmd->add_option("--adversary", synth.adversary,
                        "constant_cluster | directional_spread | "
                        "subtractive_only");
  synth_cmd->add_flag("--fixed-count", synth.fixed_count,
                      "Corrupt exactly floor(gamma n) rows");
  synth_cmd->add_option("--out", synth.out, "Output CSV (default stdout)");
  synth_cmd->add_option("--plan-out", synth.plan_out,
                        "Write the corruption plan as JSON");

  EstimateArgs est;
  CLI::App* est_cmd =
      app.add_subcommand("estimate", "Release one private mean as JSON");
  est_cmd->add_option("--input", est.input, "Dataset CSV, or - for stdin")
      ->required();
  est_cmd->add_option("--method", est.method,
                      "dp_robust | dp_plain | dp_winsorized");
  est_cmd->add_option("--epsilon", est.epsilon, "Privacy loss epsilon");
  est_cmd->add_option("--tau,--delta", est.tau,
                      "Confidence tau, used as delta");
  est_cmd->add_option("--gamma", est.gamma, "Corruption level (dp_robust)");
  est_cmd->add_option("--c-thresh", est.c_thresh, "Threshold constant C");
  est_cmd->add_option("--alpha", est.alpha, "Winsorization level");
  est_cmd->add_option("--range-bound", est.range_bound,
                      "Known coordinate range R");
  est_cmd->add_option("--seed", est.seed, "Noise seed");
  est_cmd->add_flag("--diagnostic", est.diagnostic,
                    "Also print the NON-PRIVATE pre-noise mean and filter "
                    "diagnostics");

  SweepArgs sweep;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Run an experiment sweep to CSV");
  sweep_cmd->add_option("--config", sweep.config, "Config file")->required();
  sweep_cmd->add_option("--out", sweep.out, "Records CSV (default stdout)");
  sweep_cmd->add_option("--summary", sweep.summary,
                        "Write the per-(n, d) excess error table");
  sweep_cmd->add_option("--seed", sweep.seed, "Base seed");

  CalibrateArgs cal;
  CLI::App* cal_cmd =
      app.add_subcommand("calibrate", "Calibrate the threshold constant C");
  cal_cmd->add_option("--n", cal.n, "Samples per trial");
  cal_cmd->add_option("--d", cal.d, "Dimension");
  cal_cmd->add_option("--gamma", cal.gamma, "Corruption level");
  cal_cmd->add_option("--quantile", cal.quantile, "Target pass fraction");
  cal_cmd->add_option("--trials", cal.trials, "Number of clean samples");
  cal_cmd->add_option("--seed", cal.seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*synth_cmd) return RunSynth(synth);
  if (*est_cmd) return RunEstimate(est);
  if (*sweep_cmd) return RunSweepCommand(sweep);
  return RunCalibrate(cal);
}
