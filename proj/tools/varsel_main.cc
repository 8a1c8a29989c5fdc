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

// varsel: command line front end.
//
//   varsel select --input data.csv --header --algo fsca --k 10
//   varsel bench  --config grid.json --format csv --output report.csv
//   varsel gen    --sim sim2 --m 1000 --seed 7 --output sim2.csv
//   varsel oracle --input data.csv --k 3 --metric ve --algo fsca
//
// Exit status: 0 on success, 2 when some benchmark cells failed, 1 on bad
// arguments, configuration or input errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "varsel/bench.h"
#include "varsel/dataset.h"
#include "varsel/errors.h"
#include "varsel/oracle.h"
#include "varsel/selectors.h"
#include "varsel/simgen.h"

namespace {

using nlohmann::json;
using namespace varsel;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitPartial = 2;

void WriteOutput(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << text;
}

std::vector<int> OneBased(std::vector<int> v) {
  for (int& i : v) ++i;
  return v;
}

Algorithm RequireAlgorithm(const std::string& name) {
  const auto a = ParseAlgorithm(name);
  if (!a) throw Error(ErrorCode::kInvalidArgument, "unknown algorithm '" + name + "'");
  return *a;
}

StoppingRule MakeRule(std::optional<int> k, std::optional<double> tau) {
  if (k.has_value() == tau.has_value()) {
    throw Error(ErrorCode::kInvalidArgument, "give exactly one of --k and --tau");
  }
  return k ? StoppingRule::Cardinality(*k) : StoppingRule::Threshold(*tau);
}

struct SelectArgs {
  std::string input;
  bool header = false;
  std::string algo = "fsca";
  std::optional<int> k;
  std::optional<double> tau;
  std::optional<double> sigma;
  std::string format = "json";
  std::string output;
};

int RunSelect(const SelectArgs& a) {
  const Dataset data = center_columns(load_csv(a.input, a.header));
  SelectorOptions options;
  options.sigma = a.sigma;
  const SelectionResult r =
      run_selector(RequireAlgorithm(a.algo), data, MakeRule(a.k, a.tau), options);
  std::vector<std::string> labels;
  for (int i : r.order) {
    labels.push_back(data.labels().empty() ? std::to_string(i + 1) : data.labels()[i]);
  }
  std::string text;
  if (a.format == "json") {
    json j = {{"algorithm", r.algorithm},
              {"order", OneBased(r.order)},
              {"labels", labels},
              {"ve_curve", r.ve_curve},
              {"native_trace", r.native_trace},
              {"eval_count", r.eval_count},
              {"elapsed_s", r.elapsed_seconds},
              {"warnings", r.warnings}};
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "step,index,label,ve,native\n";
    for (size_t n = 0; n < r.order.size(); ++n) {
      out << n + 1 << ',' << r.order[n] + 1 << ',' << labels[n] << ',' << r.ve_curve[n] << ','
          << r.native_trace[n] << '\n';
    }
    text = out.str();
  }
  WriteOutput(text, a.output);
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
  return kExitOk;
}

struct BenchArgs {
  std::string config;
  std::string format = "json";
  std::string output;
  std::optional<int> repeats;
  std::optional<std::uint64_t> seed;
};

int RunBench(const BenchArgs& a) {
  BenchConfig config = load_config(a.config);
  if (a.repeats) config.repeats = *a.repeats;
  if (a.seed) config.seed_base = *a.seed;
  const BenchmarkReport report = run_benchmark(config);
  WriteOutput(a.format == "json" ? report_to_json(report) + "\n" : report_to_csv(report),
              a.output);
  for (const auto& c : report.cells) {
    if (c.error) std::cerr << "cell " << c.dataset << "/" << c.algorithm << " failed: " << *c.error << "\n";
  }
  return report.failed() ? kExitPartial : kExitOk;
}

struct GenArgs {
  std::string sim = "sim1";
  int m = 1000;
  int u = 25;
  int v = 50;
  std::optional<double> noise_sd;
  std::uint64_t seed = 0;
  std::string output;
};

int RunGen(const GenArgs& a) {
  Dataset data = a.sim == "sim1" ? gen_sim1(a.m, a.seed)
                                 : gen_sim2(a.m, a.u, a.v, a.seed, a.noise_sd.value_or(kSim2NoiseSd));
  std::string spec = "generator=" + a.sim + " m=" + std::to_string(a.m);
  if (a.sim == "sim2") spec += " u=" + std::to_string(a.u) + " v=" + std::to_string(a.v);
  const std::vector<std::string> comments = {"seed=" + std::to_string(a.seed), spec};
  if (a.output.empty() || a.output == "-") {
    write_csv(data, std::cout, comments);
  } else {
    write_csv(data, a.output, comments);
  }
  return kExitOk;
}

struct OracleArgs {
  std::string input;
  bool header = false;
  int k = 1;
  std::string metric = "ve";
  std::optional<double> sigma;
  std::string algo;
  bool bounds = false;
  std::string output;
};

int RunOracle(const OracleArgs& a) {
  const Dataset data = center_columns(load_csv(a.input, a.header));
  Metric metric = Metric::kVe;
  if (a.metric == "fp") metric = Metric::kFp;
  if (a.metric == "mi") metric = Metric::kMi;
  const Dataset scored = metric == Metric::kFp ? normalize_unit(data) : data;
  const OptimalSubset best = exhaustive_optimal(scored, a.k, metric, a.sigma);
  json j = {{"metric", a.metric},
            {"k", a.k},
            {"optimal", OneBased(best.indices)},
            {"value", best.value}};
  if (!a.algo.empty()) {
    SelectorOptions options;
    options.sigma = a.sigma;
    const SelectionResult r = run_selector(RequireAlgorithm(a.algo), data,
                                           StoppingRule::Cardinality(a.k), options);
    const Comparison c = compare_to_optimal(r, best, scored, a.sigma);
    j["selection"] = {{"algorithm", r.algorithm},
                      {"order", OneBased(r.order)},
                      {"n_common", c.n_common},
                      {"ratio", c.ratio}};
  }
  if (a.bounds) {
    if (data.cols() > kMaxLatticeSize) {
      throw Error(ErrorCode::kTooLarge,
                  "--bounds needs v <= " + std::to_string(kMaxLatticeSize));
    }
    const SetFunction g = SetFunction::Tabulate(data.cols(), [&](std::span<const int> s) {
      return s.empty() ? 0.0 : metric_value(scored, s, metric, a.sigma);
    });
    const BoundReport b = bound_report(g, a.k);
    j["bounds"] = {{"alpha", b.alpha},         {"gamma", b.gamma},
                   {"b_n", b.b_n},             {"b_alpha_gamma", b.b_alpha_gamma},
                   {"greedy_ratio", b.greedy_ratio}, {"greedy", OneBased(b.greedy)}};
  }
  WriteOutput(j.dump(2) + "\n", a.output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greedy unsupervised variable selection"};
  app.require_subcommand(1);

  SelectArgs select;
  auto* sel = app.add_subcommand("select", "Run one selector on one CSV dataset");
  sel->add_option("--input", select.input, "CSV file, rows are observations")->required();
  sel->add_flag("--header", select.header, "First row holds column names");
  sel->add_option("--algo", select.algo, "fsca, lfsca, fosmod, pfs, itfs, fsfp_fsca or ufs");
  sel->add_option("--k", select.k, "Number of variables to select");
  sel->add_option("--tau", select.tau, "Stop once variance explained reaches tau percent");
  sel->add_option("--sigma", select.sigma, "ITFS noise level");
  sel->add_option("--format", select.format)->check(CLI::IsMember({"json", "csv"}));
  sel->add_option("--output", select.output, "Output file (default stdout)");

  BenchArgs bench;
  auto* ben = app.add_subcommand("bench", "Run a benchmark grid from a JSON config");
  ben->add_option("--config", bench.config, "JSON config file")->required();
  ben->add_option("--format", bench.format)->check(CLI::IsMember({"json", "csv"}));
  ben->add_option("--output", bench.output, "Output file (default stdout)");
  ben->add_option("--repeats", bench.repeats, "Override the config's repeats");
  ben->add_option("--seed", bench.seed, "Override the config's seed_base");

  GenArgs gen;
  auto* gn = app.add_subcommand("gen", "Write a simulated dataset as CSV");
  gn->add_option("--sim", gen.sim)->check(CLI::IsMember({"sim1", "sim2"}));
  gn->add_option("--m", gen.m, "Observations");
  gn->add_option("--u", gen.u, "sim2: independent block size");
  gn->add_option("--v", gen.v, "sim2: total variables");
  gn->add_option("--noise-sd", gen.noise_sd, "sim2: noise standard deviation");
  gn->add_option("--seed", gen.seed);
  gn->add_option("--output", gen.output, "Output file (default stdout)");

  OracleArgs oracle;
  auto* orc = app.add_subcommand("oracle", "Exhaustive optimum and greedy bounds");
  orc->add_option("--input", oracle.input, "CSV file")->required();
  orc->add_flag("--header", oracle.header);
  orc->add_option("--k", oracle.k)->required();
  orc->add_option("--metric", oracle.metric)->check(CLI::IsMember({"ve", "fp", "mi"}));
  orc->add_option("--sigma", oracle.sigma, "Noise level for mi");
  orc->add_option("--algo", oracle.algo, "Compare this selector with the optimum");
  orc->add_flag("--bounds", oracle.bounds, "Curvature, submodularity ratio and bounds (v <= 12)");
  orc->add_option("--output", oracle.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*sel) return RunSelect(select);
    if (*ben) return RunBench(bench);
    if (*gn) return RunGen(gen);
    if (*orc) return RunOracle(oracle);
  } catch (const Error& e) {
    std::cerr << "error [" << ToString(e.code()) << "]: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
