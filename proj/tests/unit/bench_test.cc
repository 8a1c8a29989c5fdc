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

#include "varsel/bench.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"
#include "test_util.h"
#include "varsel/errors.h"
#include "varsel/simgen.h"

namespace varsel {
namespace {

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

BenchConfig SmallConfig() {
  return parse_config(R"({
    "datasets": [{"name": "s2", "sim": {"kind": "sim2", "m": 120, "u": 3, "v": 8}}],
    "algorithms": ["fsca", "lfsca", "ufs", {"name": "fsfp_fsca", "lazy": true}],
    "k_max": 7,
    "repeats": 3,
    "seed_base": 5,
    "eval_k": [2, 7]
  })");
}

TEST(ConfigTest, ParsesDefaultsAndObjects) {
  const BenchConfig c = parse_config(R"({
    "datasets": [{"name": "a", "csv": "a.csv", "header": true},
                 {"name": "b", "sim": {"kind": "sim1", "m": 50}}],
    "algorithms": ["FSCA", {"name": "itfs", "sigma": 0.5}]
  })");
  ASSERT_EQ(c.datasets.size(), 2u);
  EXPECT_EQ(*c.datasets[0].csv, "a.csv");
  EXPECT_TRUE(c.datasets[0].header);
  EXPECT_EQ(c.datasets[1].sim->m, 50);
  EXPECT_EQ(c.algorithms[1].algorithm, Algorithm::kItfs);
  EXPECT_EQ(*c.algorithms[1].sigma, 0.5);
  EXPECT_EQ(c.k_max, 10);
  EXPECT_EQ(c.thresholds, (std::vector<double>{80, 90, 95, 99}));
  EXPECT_EQ(c.repeats, 1);
}

TEST(ConfigTest, RejectsBadInput) {
  EXPECT_EQ(CodeOf([] { parse_config("{"); }), ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { parse_config(R"({"k_maximum": 3})"); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { parse_config(R"({"algorithms": ["pca"]})"); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] {
              parse_config(R"({"datasets": [{"name": "a", "csv": "x", "sim": {"kind": "sim1"}}]})");
            }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] {
              parse_config(R"({"datasets": [{"name": "a", "sim": {"kind": "sim2", "v": 5}}],
                               "k_max": 6})");
            }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { parse_config(R"({"thresholds": [0]})"); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { parse_config(R"({"algorithms": ["fsca", "FSCA"]})"); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { parse_config(R"({"k_max": 1, "algorithms": ["ufs"]})"); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { load_config("/nonexistent/config.json"); }), ErrorCode::kIoError);
}

TEST(BenchTest, EmptyGrid) {
  const BenchmarkReport r = run_benchmark(parse_config("{}"));
  EXPECT_TRUE(r.cells.empty());
  EXPECT_FALSE(r.failed());
  EXPECT_EQ(r.schema_version, kReportSchemaVersion);
}

TEST(BenchTest, SingleAlgorithmOwnsTheTopRank) {
  const BenchmarkReport r = run_benchmark(parse_config(R"({
    "datasets": [{"name": "s1", "sim": {"kind": "sim1", "m": 200}}],
    "algorithms": ["fsca"], "k_max": 25})"));
  ASSERT_EQ(r.cells.size(), 1u);
  ASSERT_TRUE(r.cells[0].r.has_value());
  EXPECT_DOUBLE_EQ(*r.cells[0].r, 100.0);
  EXPECT_DOUBLE_EQ(*r.cells[0].speedup, 1.0);
  EXPECT_TRUE(r.cells[0].auc.has_value());
}

TEST(BenchTest, CellContents) {
  const BenchConfig config = SmallConfig();
  const BenchmarkReport r = run_benchmark(config);
  ASSERT_EQ(r.cells.size(), 4u);
  for (const CellResult& c : r.cells) {
    EXPECT_FALSE(c.error.has_value()) << *c.error;
    EXPECT_EQ(c.seeds, (std::vector<std::uint64_t>{5, 6, 7}));
    EXPECT_EQ(c.orders.size(), 3u);
    EXPECT_EQ(c.ve_curve.size(), 7u);
    EXPECT_TRUE(c.auc.has_value());
    ASSERT_EQ(c.at_k.size(), 2u);
    EXPECT_EQ(c.at_k[0].k, 2);
    EXPECT_TRUE(c.at_k[0].mi.has_value());
    EXPECT_TRUE(c.at_k[1].fp.has_value());
    ASSERT_EQ(c.k_at.size(), 4u);
    std::optional<double> prev;
    for (const ThresholdK& t : c.k_at) {
      if (prev && t.k) EXPECT_GE(*t.k, *prev);
      if (t.k) prev = t.k;
    }
    EXPECT_TRUE(c.speedup.has_value());
  }
  EXPECT_DOUBLE_EQ(*r.cells[0].speedup, 1.0);
  // Selections are deterministic; timings are not.
  const BenchmarkReport again = run_benchmark(config);
  for (size_t i = 0; i < r.cells.size(); ++i) {
    EXPECT_EQ(r.cells[i].orders, again.cells[i].orders);
    EXPECT_EQ(r.cells[i].ve_curve, again.cells[i].ve_curve);
    EXPECT_EQ(r.cells[i].r, again.cells[i].r);
  }
}

TEST(BenchTest, MedianCurveOfSeeds) {
  BenchConfig config = SmallConfig();
  config.algorithms.resize(1);
  config.eval_k.clear();
  const BenchmarkReport r = run_benchmark(config);
  std::vector<VeCurve> curves;
  for (std::uint64_t seed : {5, 6, 7}) {
    const Dataset d = center_columns(gen_sim2(120, 3, 8, seed));
    curves.push_back(fsca_select(d, StoppingRule::Cardinality(7)).ve_curve);
  }
  for (size_t j = 0; j < 7; ++j) {
    std::vector<double> at = {curves[0][j], curves[1][j], curves[2][j]};
    std::sort(at.begin(), at.end());
    EXPECT_DOUBLE_EQ(r.cells[0].ve_curve[j], at[1]);
  }
}

TEST(BenchTest, CsvDatasetAndMissingFile) {
  const std::filesystem::path dir = std::filesystem::path(::testing::TempDir()) / "varsel_bench";
  std::filesystem::create_directories(dir);
  write_csv(gen_sim1(80, 1), dir / "sim1.csv");
  BenchConfig config;
  config.datasets.push_back({"file", (dir / "sim1.csv").string(), true, std::nullopt});
  config.datasets.push_back({"missing", (dir / "nope.csv").string(), false, std::nullopt});
  config.algorithms.push_back({});
  config.k_max = 5;
  config.repeats = 2;
  const BenchmarkReport r = run_benchmark(config);
  ASSERT_EQ(r.cells.size(), 2u);
  EXPECT_FALSE(r.cells[0].error.has_value());
  EXPECT_EQ(r.cells[0].orders.size(), 1u);
  ASSERT_TRUE(r.cells[1].error.has_value());
  EXPECT_TRUE(r.failed());
}

TEST(BenchTest, LazyFscaAucMatchesFsca) {
  for (const char* sim : {R"({"kind": "sim1", "m": 1000})",
                          R"({"kind": "sim2", "m": 1000, "u": 25, "v": 50})"}) {
    const std::string text = std::string(R"({"datasets": [{"name": "d", "sim": )") + sim +
                             R"(}], "algorithms": ["fsca", "lfsca"], "k_max": )" +
                             (std::string(sim).find("sim1") != std::string::npos ? "26" : "50") +
                             R"(, "repeats": 10})";
    const BenchmarkReport r = run_benchmark(parse_config(text));
    ASSERT_EQ(r.cells.size(), 2u);
    ASSERT_TRUE(r.cells[0].auc && r.cells[1].auc);
    EXPECT_LE(std::abs(*r.cells[0].auc - *r.cells[1].auc), 0.005);
  }
}

TEST(ReportTest, JsonRoundTrip) {
  const BenchmarkReport r = run_benchmark(SmallConfig());
  const BenchmarkReport back = report_from_json(report_to_json(r));
  EXPECT_EQ(back, r);
  std::string text = report_to_json(r);
  text.replace(text.find("\"1.0.0\""), 7, "\"2.0.0\"");
  EXPECT_THROW(report_from_json(text), Error);
}

TEST(ReportTest, OrdersAreOneBasedInJson) {
  const BenchmarkReport r = run_benchmark(SmallConfig());
  const nlohmann::json j = nlohmann::json::parse(report_to_json(r));
  const auto& cell = j.at("cells").at(0);
  EXPECT_EQ(cell.at("orders").at(0).at(0).get<int>(), r.cells[0].orders[0][0] + 1);
  EXPECT_EQ(cell.at("dataset").get<std::string>(), "s2");
  EXPECT_EQ(j.at("schema_version").get<std::string>(), kReportSchemaVersion);
}

TEST(ReportTest, CsvColumns) {
  const BenchmarkReport r = run_benchmark(SmallConfig());
  std::istringstream in(report_to_csv(r));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "dataset,algorithm,auc,r,median_elapsed_s,speedup,k_80%,k_90%,k_95%,k_99%");
  int rows = 0;
  while (std::getline(in, line)) {
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 9) << line;
    ++rows;
  }
  EXPECT_EQ(rows, 4);
}

TEST(ReportTest, EmitAndRead) {
  const BenchmarkReport r = run_benchmark(SmallConfig());
  const std::filesystem::path path =
      std::filesystem::path(::testing::TempDir()) / "varsel_report.json";
  emit_report(r, path, ReportFormat::kJson);
  EXPECT_EQ(read_report(path), r);
  EXPECT_EQ(CodeOf([&] { emit_report(r, "/nonexistent/dir/x.json", ReportFormat::kCsv); }),
            ErrorCode::kIoError);
}

TEST(SpeedupTest, FscaRatioIsOne) {
  const Dataset d = ::varsel::testing::CenteredRandom(200, 40, 3);
  const Algorithm algos[] = {Algorithm::kFsca, Algorithm::kLfsca};
  const auto s = measure_speedup(d, 5, 3, algos);
  EXPECT_DOUBLE_EQ(s.at("FSCA"), 1.0);
  EXPECT_GT(s.at("L-FSCA"), 0.0);
  EXPECT_THROW(measure_speedup(d, 5, 2, algos), Error);
}

}  // namespace
}  // namespace varsel
