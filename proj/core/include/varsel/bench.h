// Copyright 2026 The Authors.
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

// Benchmark harness: runs selector x dataset grids, aggregates metrics over
// seeds and writes JSON / CSV reports.

#ifndef VARSEL_BENCH_H_
#define VARSEL_BENCH_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "varsel/dataset.h"
#include "varsel/selectors.h"

namespace varsel {

inline constexpr char kReportSchemaVersion[] = "1.0.0";

struct SimSpec {
  enum class Kind { kSim1, kSim2 };
  Kind kind = Kind::kSim1;
  int m = 1000;
  int u = 25;  // Sim2 only
  int v = 50;  // Sim2 only
  std::optional<double> noise_sd;  // Sim2 only

  bool operator==(const SimSpec&) const = default;
};

struct DatasetSource {
  std::string name;
  std::optional<std::string> csv;
  bool header = false;
  std::optional<SimSpec> sim;

  bool operator==(const DatasetSource&) const = default;
};

struct AlgorithmConfig {
  Algorithm algorithm = Algorithm::kFsca;
  std::optional<double> sigma;
  bool lazy = false;
  bool rebuild_basis = false;
  double nipals_tolerance = 1e-9;
  int nipals_max_iterations = 500;

  SelectorOptions options() const;
  bool operator==(const AlgorithmConfig&) const = default;
};

struct BenchConfig {
  std::vector<DatasetSource> datasets;
  std::vector<AlgorithmConfig> algorithms;
  int k_max = 10;
  std::vector<double> thresholds = {80.0, 90.0, 95.0, 99.0};
  // Seeds per simulated dataset; timing repeats for CSV datasets.
  int repeats = 1;
  std::uint64_t seed_base = 0;
  int parallelism = 1;
  // k values at which VE, FP and MI are reported.
  std::vector<int> eval_k;

  // Throws Error(kInvalidArgument) on an inconsistent configuration.
  void Validate() const;
  bool operator==(const BenchConfig&) const = default;
};

// Throws Error(kParseError) on malformed JSON and Error(kInvalidArgument) on
// unknown fields or values.
BenchConfig parse_config(const std::string& json_text);
BenchConfig load_config(const std::filesystem::path& path);

struct EvalPoint {
  int k = 0;
  double ve = 0.0;
  std::optional<double> fp;  // on unit-norm columns; null with a zero column
  std::optional<double> mi;  // default sigma; null when k = v

  bool operator==(const EvalPoint&) const = default;
};

struct ThresholdK {
  double n = 0.0;
  // Median over seeds; null when the median seed never reaches n% within
  // k_max.
  std::optional<double> k;

  bool operator==(const ThresholdK&) const = default;
};

struct CellResult {
  std::string dataset;
  std::string algorithm;
  std::vector<std::uint64_t> seeds;
  // Median over seeds; null unless the curve reaches k = v - 1.
  std::optional<double> auc;
  std::vector<ThresholdK> k_at;
  // Null when some curve of the dataset never exceeds 99%.
  std::optional<double> r;
  // Element-wise median VE curve over seeds.
  std::vector<double> ve_curve;
  std::vector<EvalPoint> at_k;
  // One selection per seed, 0-based (1-based in the JSON document).
  std::vector<std::vector<int>> orders;
  double median_elapsed_s = 0.0;
  // median t_FSCA / median t; null without an FSCA cell on the dataset.
  std::optional<double> speedup;
  std::vector<std::string> warnings;
  std::optional<std::string> error;

  bool operator==(const CellResult&) const = default;
};

struct BenchmarkReport {
  std::string schema_version = kReportSchemaVersion;
  BenchConfig config;
  std::vector<CellResult> cells;

  bool failed() const;
  bool operator==(const BenchmarkReport&) const = default;
};

// Grid cells run on up to config.parallelism threads; use 1 when timings
// matter.
BenchmarkReport run_benchmark(const BenchConfig& config);

// Median t_FSCA / median t_algorithm over `repeats` timed runs, keyed by
// display name. FSCA is always timed.
std::map<std::string, double> measure_speedup(const Dataset& data, int k, int repeats,
                                              std::span<const Algorithm> algorithms);

enum class ReportFormat { kJson, kCsv };

std::string report_to_json(const BenchmarkReport& report);
BenchmarkReport report_from_json(const std::string& json_text);
// Columns: dataset, algorithm, auc, r, median_elapsed_s, speedup, then one
// k_<n>% column per threshold. Empty fields are nulls.
std::string report_to_csv(const BenchmarkReport& report);

// Throws Error(kIoError) when the file cannot be written.
void emit_report(const BenchmarkReport& report, const std::filesystem::path& path,
                 ReportFormat format);
BenchmarkReport read_report(const std::filesystem::path& path);

}  // namespace varsel

#endif  // VARSEL_BENCH_H_
