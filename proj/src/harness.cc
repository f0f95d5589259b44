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

#include "robustdp/harness.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "robustdp/csv.h"
#include "robustdp/random.h"
#include "robustdp/status_macros.h"

namespace robustdp {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::array<Method, 3> kAllMethods = {
    Method::kDpRobust, Method::kDpPlain, Method::kDpWinsorized};

absl::StatusOr<std::vector<int64_t>> ParseIntList(absl::string_view key,
                                                  absl::string_view value) {
  std::vector<int64_t> out;
  for (absl::string_view part : absl::StrSplit(value, ',', absl::SkipEmpty())) {
    int64_t v = 0;
    if (!absl::SimpleAtoi(absl::StripAsciiWhitespace(part), &v)) {
      return absl::InvalidArgumentError(
          absl::StrCat(key, ": '", part, "' is not an integer"));
    }
    out.push_back(v);
  }
  return out;
}

absl::StatusOr<double> ParseReal(absl::string_view key, absl::string_view value) {
  double v = 0.0;
  if (!absl::SimpleAtod(value, &v)) {
    return absl::InvalidArgumentError(
        absl::StrCat(key, ": '", value, "' is not a number"));
  }
  return v;
}

absl::StatusOr<bool> ParseBool(absl::string_view key, absl::string_view value) {
  bool v = false;
  if (!absl::SimpleAtob(value, &v)) {
    return absl::InvalidArgumentError(
        absl::StrCat(key, ": '", value, "' is not a boolean"));
  }
  return v;
}

struct CellData {
  Dataset clean;
  Dataset corrupted;
};

absl::StatusOr<CellData> MakeCell(const ExperimentConfig& config, int64_t n,
                                  int64_t d, int trial) {
  const uint64_t seed = DataSeed(config.base_seed, n, d, trial);
  CellData cell;
  ASSIGN_OR_RETURN(cell.clean, SampleGaussian(n, d, Vector::Zero(d), seed));
  Adversary adversary;
  adversary.kind = config.adversary;
  ASSIGN_OR_RETURN(auto corrupted,
                   Corrupt(cell.clean, config.gamma, adversary, seed));
  cell.corrupted = std::move(corrupted.first);
  return cell;
}

absl::StatusOr<EstimateReport> RunMethod(const ExperimentConfig& config,
                                         Method method, const CellData& cell,
                                         uint64_t seed) {
  EstimateOptions options;
  options.diagnostic = true;
  switch (method) {
    case Method::kDpRobust:
      return DpRobustMean(cell.corrupted,
                          {config.gamma, config.tau, config.c_thresh},
                          config.epsilon, seed, options);
    case Method::kDpPlain:
      return DpMean(config.corrupt_baselines ? cell.corrupted : cell.clean,
                    config.tau, config.c_thresh, config.epsilon, seed,
                    options);
    case Method::kDpWinsorized:
      return DpWinsorizedMean(
          config.corrupt_baselines ? cell.corrupted : cell.clean,
          config.winsorize, {config.epsilon, config.tau}, seed, options);
  }
  return absl::InternalError("unhandled method");
}

TrialRecord RunTrial(const ExperimentConfig& config, Method method, int64_t n,
                     int64_t d, int trial,
                     const absl::StatusOr<CellData>& cell) {
  TrialRecord rec;
  rec.method = method;
  rec.n = n;
  rec.d = d;
  rec.epsilon = config.epsilon;
  rec.tau = config.tau;
  rec.c_thresh = config.c_thresh;
  rec.trial = trial;
  rec.seed = MethodSeed(config.base_seed, n, d, trial, method);
  switch (method) {
    case Method::kDpRobust:
      rec.gamma = config.gamma;
      break;
    case Method::kDpPlain:
      rec.gamma = 1.0 / static_cast<double>(n);
      break;
    case Method::kDpWinsorized:
      rec.gamma = config.corrupt_baselines ? config.gamma : 0.0;
      break;
  }

  auto fail = [&rec](const absl::Status& status) {
    rec.error = std::string(status.message());
    rec.l2_error = rec.robust_l2_error = rec.noise_sigma = kNaN;
    rec.bound_used = kNaN;
    return rec;
  };
  if (!cell.ok()) return fail(cell.status());

  const auto start = std::chrono::steady_clock::now();
  absl::StatusOr<EstimateReport> report = RunMethod(config, method, *cell, rec.seed);
  const auto stop = std::chrono::steady_clock::now();
  if (!report.ok()) return fail(report.status());

  rec.l2_error = report->private_mean.norm();
  rec.robust_l2_error = report->robust_mean ? report->robust_mean->norm() : kNaN;
  rec.noise_sigma = std::sqrt(report->noise_variance);
  rec.bound_used = report->bound_used;
  if (report->filter_diag) {
    rec.iterations = report->filter_diag->iterations;
    rec.removed_count =
        static_cast<int64_t>(report->filter_diag->removed_indices.size());
  }
  if (config.record_timing) {
    rec.runtime_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
  }
  return rec;
}

MethodSummary Summarize(const std::vector<double>& values) {
  MethodSummary s;
  s.count = static_cast<int64_t>(values.size());
  if (values.empty()) {
    s.median = s.q25 = s.q75 = s.mean = kNaN;
    return s;
  }
  s.median = Quantile(values, 0.5);
  s.q25 = Quantile(values, 0.25);
  s.q75 = Quantile(values, 0.75);
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  return s;
}

}  // namespace

absl::Status ExperimentConfig::Validate() const {
  if (n_values.empty() || d_values.empty()) {
    return absl::InvalidArgumentError("n_values and d_values must be nonempty");
  }
  for (int64_t n : n_values) {
    if (n < 3) return absl::InvalidArgumentError("every n must be >= 3");
  }
  for (int64_t d : d_values) {
    if (d < 1) return absl::InvalidArgumentError("every d must be >= 1");
  }
  if (trials < 1) return absl::InvalidArgumentError("trials must be >= 1");
  if (methods.empty()) {
    return absl::InvalidArgumentError("methods must be nonempty");
  }
  RETURN_IF_ERROR((RobustConfig{gamma, tau, c_thresh}.Validate()));
  RETURN_IF_ERROR((PrivacyParams{epsilon, tau}.Validate()));
  return winsorize.Validate();
}

absl::StatusOr<ExperimentConfig> ParseExperimentConfig(std::string_view text_in) {
  const absl::string_view text(text_in.data(), text_in.size());
  ExperimentConfig config;
  std::set<std::string> seen;
  int line_no = 0;
  for (absl::string_view raw : absl::StrSplit(text, '\n')) {
    ++line_no;
    absl::string_view line = raw.substr(0, raw.find('#'));
    line = absl::StripAsciiWhitespace(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == absl::string_view::npos) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": expected key = value"));
    }
    const std::string key(absl::StripAsciiWhitespace(line.substr(0, eq)));
    const absl::string_view value =
        absl::StripAsciiWhitespace(line.substr(eq + 1));
    if (!seen.insert(key).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": duplicate key ", key));
    }

    if (key == "n_values") {
      ASSIGN_OR_RETURN(config.n_values, ParseIntList(key, value));
    } else if (key == "d_values") {
      ASSIGN_OR_RETURN(config.d_values, ParseIntList(key, value));
    } else if (key == "gamma") {
      ASSIGN_OR_RETURN(config.gamma, ParseReal(key, value));
    } else if (key == "epsilon") {
      ASSIGN_OR_RETURN(config.epsilon, ParseReal(key, value));
    } else if (key == "tau") {
      ASSIGN_OR_RETURN(config.tau, ParseReal(key, value));
    } else if (key == "c_thresh") {
      ASSIGN_OR_RETURN(config.c_thresh, ParseReal(key, value));
    } else if (key == "trials") {
      if (!absl::SimpleAtoi(value, &config.trials)) {
        return absl::InvalidArgumentError("trials: not an integer");
      }
    } else if (key == "base_seed") {
      if (!absl::SimpleAtoi(value, &config.base_seed)) {
        return absl::InvalidArgumentError("base_seed: not an unsigned integer");
      }
    } else if (key == "methods") {
      config.methods.clear();
      for (absl::string_view m : absl::StrSplit(value, ',', absl::SkipEmpty())) {
        ASSIGN_OR_RETURN(const Method method,
                         ParseMethod(std::string(absl::StripAsciiWhitespace(m))));
        config.methods.push_back(method);
      }
    } else if (key == "winsorize.alpha") {
      ASSIGN_OR_RETURN(config.winsorize.alpha, ParseReal(key, value));
    } else if (key == "winsorize.range_bound") {
      ASSIGN_OR_RETURN(config.winsorize.range_bound, ParseReal(key, value));
    } else if (key == "adversary") {
      ASSIGN_OR_RETURN(config.adversary, ParseAdversary(std::string(value)));
    } else if (key == "corrupt_baselines") {
      ASSIGN_OR_RETURN(config.corrupt_baselines, ParseBool(key, value));
    } else if (key == "record_timing") {
      ASSIGN_OR_RETURN(config.record_timing, ParseBool(key, value));
    } else {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": unknown key ", key));
    }
  }
  RETURN_IF_ERROR(config.Validate());
  return config;
}

uint64_t DataSeed(uint64_t base_seed, int64_t n, int64_t d, int trial) {
  return base_seed ^ HashSeedParts({static_cast<uint64_t>(n),
                                    static_cast<uint64_t>(d),
                                    static_cast<uint64_t>(trial)});
}

uint64_t MethodSeed(uint64_t base_seed, int64_t n, int64_t d, int trial,
                    Method method) {
  return base_seed ^ HashSeedParts({static_cast<uint64_t>(n),
                                    static_cast<uint64_t>(d),
                                    static_cast<uint64_t>(trial),
                                    static_cast<uint64_t>(method) + 1});
}

absl::StatusOr<std::vector<TrialRecord>> RunSweep(
    const ExperimentConfig& config) {
  RETURN_IF_ERROR(config.Validate());
  std::vector<TrialRecord> records;
  records.reserve(config.n_values.size() * config.d_values.size() *
                  config.trials * config.methods.size());
  for (int64_t n : config.n_values) {
    for (int64_t d : config.d_values) {
      for (int trial = 0; trial < config.trials; ++trial) {
        const absl::StatusOr<CellData> cell = MakeCell(config, n, d, trial);
        for (Method method : config.methods) {
          records.push_back(RunTrial(config, method, n, d, trial, cell));
        }
      }
    }
  }
  return records;
}

std::string RecordsToCsv(const std::vector<TrialRecord>& records) {
  std::ostringstream out;
  out << "method,n,d,gamma,epsilon,tau,c_thresh,trial,seed,l2_error,"
         "robust_l2_error,noise_sigma,iterations,removed_count,runtime_ms,"
         "bound_used,error\n";
  for (const TrialRecord& r : records) {
    out << MethodName(r.method) << ',' << r.n << ',' << r.d << ','
        << FormatDouble(r.gamma) << ',' << FormatDouble(r.epsilon) << ','
        << FormatDouble(r.tau) << ',' << FormatDouble(r.c_thresh) << ','
        << r.trial << ',' << r.seed << ',' << FormatDouble(r.l2_error) << ','
        << FormatDouble(r.robust_l2_error) << ','
        << FormatDouble(r.noise_sigma) << ',' << r.iterations << ','
        << r.removed_count << ',' << FormatDouble(r.runtime_ms) << ','
        << FormatDouble(r.bound_used) << ',';
    // Messages are free text; keep the row parseable.
    std::string error = r.error;
    std::replace(error.begin(), error.end(), ',', ';');
    std::replace(error.begin(), error.end(), '\n', ' ');
    out << error << '\n';
  }
  return out.str();
}

const std::vector<double>& CalibrationGrid() {
  static const std::vector<double>* grid = [] {
    auto* g = new std::vector<double>;
    for (int k = -40; k <= 80; ++k) g->push_back(std::pow(10.0, k / 20.0));
    return g;
  }();
  return *grid;
}

absl::StatusOr<Calibration> CalibrateC(int64_t n, int64_t d, double gamma,
                                       double quantile, int trials,
                                       uint64_t seed) {
  if (!(quantile >= 0.5 && quantile < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("quantile must lie in [0.5, 1), got ", quantile));
  }
  if (trials < 1) return absl::InvalidArgumentError("trials must be >= 1");
  if (n < 2 || d < 1) return absl::InvalidArgumentError("invalid n or d");
  ASSIGN_OR_RETURN(const double unit_thresh, Thresh(gamma, 1.0));

  std::vector<double> deviations;
  deviations.reserve(trials);
  for (int t = 0; t < trials; ++t) {
    const uint64_t trial_seed =
        HashSeedParts({seed, static_cast<uint64_t>(t)});
    ASSIGN_OR_RETURN(const Dataset sample,
                     SampleGaussian(n, d, Vector::Zero(d), trial_seed));
    ASSIGN_OR_RETURN(const Vector mean, EmpiricalMean(sample));
    ASSIGN_OR_RETURN(const SymMatrix cov, EmpiricalCovariance(sample, mean));
    ASSIGN_OR_RETURN(const double dev, SpectralDeviation(cov));
    deviations.push_back(dev);
  }

  auto pass_fraction = [&](double c) {
    const double limit = c * unit_thresh;
    int64_t pass = 0;
    for (double dev : deviations) pass += dev <= limit;
    return static_cast<double>(pass) / trials;
  };

  const std::vector<double>& grid = CalibrationGrid();
  Calibration result;
  if (pass_fraction(grid.back()) < quantile) {
    result.c_thresh = grid.back();
    result.pass_fraction = pass_fraction(grid.back());
    result.at_grid_max = true;
    result.warnings.push_back(absl::StrCat(
        "quantile ", quantile, " not reached on the grid; returning C = ",
        grid.back()));
    return result;
  }
  // pass_fraction is non-decreasing in C.
  size_t lo = 0, hi = grid.size() - 1;
  while (lo < hi) {
    const size_t mid = lo + (hi - lo) / 2;
    if (pass_fraction(grid[mid]) >= quantile) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  result.c_thresh = grid[lo];
  result.pass_fraction = pass_fraction(grid[lo]);
  return result;
}

double Quantile(std::vector<double> values, double q) {
  if (values.empty()) return kNaN;
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const size_t lo = static_cast<size_t>(std::floor(pos));
  const size_t hi = std::min(lo + 1, values.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return values[lo] + frac * (values[hi] - values[lo]);
}

ExcessTable ExcessErrorTable(const std::vector<TrialRecord>& records) {
  // (n, d) -> method -> trial -> error, completed trials only.
  std::map<std::pair<int64_t, int64_t>,
           std::array<std::map<int, double>, 3>>
      cells;
  for (const TrialRecord& r : records) {
    auto& cell = cells[{r.n, r.d}];
    if (!r.error.empty()) continue;
    cell[static_cast<size_t>(r.method)][r.trial] = r.l2_error;
  }

  ExcessTable table;
  for (const auto& [key, by_method] : cells) {
    ExcessRow row;
    row.n = key.first;
    row.d = key.second;
    for (Method m : kAllMethods) {
      std::vector<double> values;
      for (const auto& [trial, err] : by_method[static_cast<size_t>(m)]) {
        values.push_back(err);
      }
      row.methods[static_cast<size_t>(m)] = Summarize(values);
    }

    auto excess = [&](Method other) {
      const auto& wins =
          by_method[static_cast<size_t>(Method::kDpWinsorized)];
      const auto& base = by_method[static_cast<size_t>(other)];
      if (wins.empty() || base.empty()) return kNaN;
      std::vector<double> a, b;
      int64_t unpaired = 0;
      for (const auto& [trial, err] : wins) {
        auto it = base.find(trial);
        if (it == base.end()) {
          ++unpaired;
          continue;
        }
        a.push_back(err);
        b.push_back(it->second);
      }
      unpaired += static_cast<int64_t>(base.size() - b.size());
      if (unpaired > 0) {
        table.warnings.push_back(absl::StrCat(
            "n=", row.n, " d=", row.d, ": skipped ", unpaired,
            " unpaired records for ", std::string(MethodName(other))));
      }
      if (a.empty()) return kNaN;
      return Quantile(a, 0.5) - Quantile(b, 0.5);
    };
    row.excess_vs_robust = excess(Method::kDpRobust);
    row.excess_vs_plain = excess(Method::kDpPlain);
    table.rows.push_back(row);
  }
  return table;
}

std::string ExcessTableToCsv(const ExcessTable& table) {
  std::ostringstream out;
  out << "n,d";
  for (Method m : kAllMethods) {
    const std::string_view name = MethodName(m);
    out << ',' << name << "_count," << name << "_median," << name << "_q25,"
        << name << "_q75," << name << "_mean";
  }
  out << ",excess_vs_robust,excess_vs_plain\n";
  for (const ExcessRow& row : table.rows) {
    out << row.n << ',' << row.d;
    for (const MethodSummary& s : row.methods) {
      out << ',' << s.count << ',' << FormatDouble(s.median) << ','
          << FormatDouble(s.q25) << ',' << FormatDouble(s.q75) << ','
          << FormatDouble(s.mean);
    }
    out << ',' << FormatDouble(row.excess_vs_robust) << ','
        << FormatDouble(row.excess_vs_plain) << '\n';
  }
  return out.str();
}

}  // namespace robustdp
