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
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "varsel/errors.h"
#include "varsel/metrics.h"
#include "varsel/simgen.h"

namespace varsel {

namespace {

using nlohmann::json;

constexpr double kInf = std::numeric_limits<double>::infinity();

double Median(std::vector<double> values) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(values.begin(), values.end());
  const size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  const double lo = values[n / 2 - 1];
  const double hi = values[n / 2];
  if (std::isinf(lo) || std::isinf(hi)) return hi;
  return 0.5 * (lo + hi);
}

std::optional<double> FiniteOrNull(double x) {
  if (std::isfinite(x)) return x;
  return std::nullopt;
}

[[noreturn]] void BadConfig(const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, "config: " + what);
}

void CheckKeys(const json& j, std::initializer_list<const char*> allowed,
               const std::string& where) {
  if (!j.is_object()) BadConfig(where + " must be an object");
  for (const auto& item : j.items()) {
    if (std::none_of(allowed.begin(), allowed.end(),
                     [&](const char* a) { return item.key() == a; })) {
      BadConfig("unknown field '" + item.key() + "' in " + where);
    }
  }
}

template <typename T>
T Get(const json& j, const char* key, const std::string& where) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    BadConfig(std::string("bad or missing '") + key + "' in " + where);
  }
}

template <typename T>
void GetIfPresent(const json& j, const char* key, T& out, const std::string& where) {
  if (j.contains(key)) out = Get<T>(j, key, where);
}

json OptionalToJson(const std::optional<double>& x) {
  return x ? json(*x) : json(nullptr);
}

std::optional<double> OptionalFromJson(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

// --- config <-> json ----------------------------------------------------------

json ToJson(const SimSpec& s) {
  json j = {{"kind", s.kind == SimSpec::Kind::kSim1 ? "sim1" : "sim2"}, {"m", s.m}};
  if (s.kind == SimSpec::Kind::kSim2) {
    j["u"] = s.u;
    j["v"] = s.v;
    if (s.noise_sd) j["noise_sd"] = *s.noise_sd;
  }
  return j;
}

SimSpec SimFromJson(const json& j, const std::string& where) {
  CheckKeys(j, {"kind", "m", "u", "v", "noise_sd"}, where);
  SimSpec s;
  const std::string kind = Get<std::string>(j, "kind", where);
  if (kind == "sim1") {
    s.kind = SimSpec::Kind::kSim1;
  } else if (kind == "sim2") {
    s.kind = SimSpec::Kind::kSim2;
  } else {
    BadConfig("sim kind must be 'sim1' or 'sim2' in " + where);
  }
  GetIfPresent(j, "m", s.m, where);
  GetIfPresent(j, "u", s.u, where);
  GetIfPresent(j, "v", s.v, where);
  if (j.contains("noise_sd")) s.noise_sd = Get<double>(j, "noise_sd", where);
  return s;
}

json ToJson(const DatasetSource& d) {
  json j = {{"name", d.name}};
  if (d.csv) {
    j["csv"] = *d.csv;
    j["header"] = d.header;
  }
  if (d.sim) j["sim"] = ToJson(*d.sim);
  return j;
}

DatasetSource DatasetFromJson(const json& j) {
  const std::string where = "dataset";
  CheckKeys(j, {"name", "csv", "header", "sim"}, where);
  DatasetSource d;
  d.name = Get<std::string>(j, "name", where);
  if (j.contains("csv")) d.csv = Get<std::string>(j, "csv", where + " '" + d.name + "'");
  GetIfPresent(j, "header", d.header, where);
  if (j.contains("sim")) d.sim = SimFromJson(j.at("sim"), "sim of '" + d.name + "'");
  return d;
}

json ToJson(const AlgorithmConfig& a) {
  json j = {{"name", std::string(Id(a.algorithm))},
            {"lazy", a.lazy},
            {"rebuild_basis", a.rebuild_basis},
            {"nipals_tolerance", a.nipals_tolerance},
            {"nipals_max_iterations", a.nipals_max_iterations}};
  j["sigma"] = OptionalToJson(a.sigma);
  return j;
}

AlgorithmConfig AlgorithmFromJson(const json& j) {
  const std::string where = "algorithm";
  AlgorithmConfig a;
  std::string name;
  if (j.is_string()) {
    name = j.get<std::string>();
  } else {
    CheckKeys(j, {"name", "sigma", "lazy", "rebuild_basis", "nipals_tolerance",
                  "nipals_max_iterations"},
              where);
    name = Get<std::string>(j, "name", where);
    if (j.contains("sigma") && !j.at("sigma").is_null()) {
      a.sigma = Get<double>(j, "sigma", where);
    }
    GetIfPresent(j, "lazy", a.lazy, where);
    GetIfPresent(j, "rebuild_basis", a.rebuild_basis, where);
    GetIfPresent(j, "nipals_tolerance", a.nipals_tolerance, where);
    GetIfPresent(j, "nipals_max_iterations", a.nipals_max_iterations, where);
  }
  const auto algorithm = ParseAlgorithm(name);
  if (!algorithm) BadConfig("unknown algorithm '" + name + "'");
  a.algorithm = *algorithm;
  return a;
}

json ToJson(const BenchConfig& c) {
  json j;
  j["datasets"] = json::array();
  for (const auto& d : c.datasets) j["datasets"].push_back(ToJson(d));
  j["algorithms"] = json::array();
  for (const auto& a : c.algorithms) j["algorithms"].push_back(ToJson(a));
  j["k_max"] = c.k_max;
  j["thresholds"] = c.thresholds;
  j["repeats"] = c.repeats;
  j["seed_base"] = c.seed_base;
  j["parallelism"] = c.parallelism;
  j["eval_k"] = c.eval_k;
  return j;
}

BenchConfig ConfigFromJson(const json& j) {
  const std::string where = "config";
  CheckKeys(j, {"datasets", "algorithms", "k_max", "thresholds", "repeats", "seed_base",
                "parallelism", "eval_k"},
            where);
  BenchConfig c;
  if (j.contains("datasets")) {
    if (!j.at("datasets").is_array()) BadConfig("'datasets' must be an array");
    for (const auto& d : j.at("datasets")) c.datasets.push_back(DatasetFromJson(d));
  }
  if (j.contains("algorithms")) {
    if (!j.at("algorithms").is_array()) BadConfig("'algorithms' must be an array");
    for (const auto& a : j.at("algorithms")) c.algorithms.push_back(AlgorithmFromJson(a));
  }
  GetIfPresent(j, "k_max", c.k_max, where);
  GetIfPresent(j, "thresholds", c.thresholds, where);
  GetIfPresent(j, "repeats", c.repeats, where);
  GetIfPresent(j, "seed_base", c.seed_base, where);
  GetIfPresent(j, "parallelism", c.parallelism, where);
  GetIfPresent(j, "eval_k", c.eval_k, where);
  c.Validate();
  return c;
}

json ParseJson(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, std::string("invalid JSON: ") + e.what());
  }
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// --- report <-> json ----------------------------------------------------------

std::vector<int> ToOneBased(const std::vector<int>& order) {
  std::vector<int> out(order);
  for (int& i : out) ++i;
  return out;
}

std::vector<int> ToZeroBased(std::vector<int> order) {
  for (int& i : order) --i;
  return order;
}

json ToJson(const CellResult& c) {
  json j;
  j["dataset"] = c.dataset;
  j["algorithm"] = c.algorithm;
  j["seeds"] = c.seeds;
  j["auc"] = OptionalToJson(c.auc);
  j["k_at"] = json::array();
  for (const auto& t : c.k_at) j["k_at"].push_back({{"n", t.n}, {"k", OptionalToJson(t.k)}});
  j["r"] = OptionalToJson(c.r);
  j["ve_curve"] = c.ve_curve;
  j["at_k"] = json::array();
  for (const auto& e : c.at_k) {
    j["at_k"].push_back(
        {{"k", e.k}, {"ve", e.ve}, {"fp", OptionalToJson(e.fp)}, {"mi", OptionalToJson(e.mi)}});
  }
  j["orders"] = json::array();
  for (const auto& o : c.orders) j["orders"].push_back(ToOneBased(o));
  j["median_elapsed_s"] = c.median_elapsed_s;
  j["speedup"] = OptionalToJson(c.speedup);
  j["warnings"] = c.warnings;
  j["error"] = c.error ? json(*c.error) : json(nullptr);
  return j;
}

CellResult CellFromJson(const json& j) {
  CellResult c;
  c.dataset = j.at("dataset").get<std::string>();
  c.algorithm = j.at("algorithm").get<std::string>();
  c.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
  c.auc = OptionalFromJson(j.at("auc"));
  for (const auto& t : j.at("k_at")) {
    c.k_at.push_back({t.at("n").get<double>(), OptionalFromJson(t.at("k"))});
  }
  c.r = OptionalFromJson(j.at("r"));
  c.ve_curve = j.at("ve_curve").get<std::vector<double>>();
  for (const auto& e : j.at("at_k")) {
    c.at_k.push_back({e.at("k").get<int>(), e.at("ve").get<double>(),
                      OptionalFromJson(e.at("fp")), OptionalFromJson(e.at("mi"))});
  }
  for (const auto& o : j.at("orders")) c.orders.push_back(ToZeroBased(o.get<std::vector<int>>()));
  c.median_elapsed_s = j.at("median_elapsed_s").get<double>();
  c.speedup = OptionalFromJson(j.at("speedup"));
  c.warnings = j.at("warnings").get<std::vector<std::string>>();
  if (!j.at("error").is_null()) c.error = j.at("error").get<std::string>();
  return c;
}

// --- grid execution -------------------------------------------------------------

struct Instance {
  Dataset data;
  std::optional<Dataset> unit;
  std::optional<CovarianceModel> model;
  std::uint64_t seed;
};

struct PreparedDataset {
  std::vector<Instance> instances;
  std::optional<std::string> error;
};

Dataset Generate(const SimSpec& spec, std::uint64_t seed) {
  if (spec.kind == SimSpec::Kind::kSim1) return gen_sim1(spec.m, seed);
  return gen_sim2(spec.m, spec.u, spec.v, seed, spec.noise_sd.value_or(kSim2NoiseSd));
}

PreparedDataset Prepare(const DatasetSource& source, const BenchConfig& config) {
  PreparedDataset out;
  try {
    std::vector<std::pair<Dataset, std::uint64_t>> raw;
    if (source.csv) {
      raw.emplace_back(load_csv(*source.csv, source.header), config.seed_base);
    } else {
      for (int r = 0; r < config.repeats; ++r) {
        const std::uint64_t seed = config.seed_base + static_cast<std::uint64_t>(r);
        raw.emplace_back(Generate(*source.sim, seed), seed);
      }
    }
    for (auto& [data, seed] : raw) {
      if (config.k_max > data.cols()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "k_max = " + std::to_string(config.k_max) + " exceeds v = " +
                        std::to_string(data.cols()));
      }
      Instance inst{center_columns(data), std::nullopt, std::nullopt, seed};
      if (!config.eval_k.empty()) {
        try {
          inst.unit = normalize_unit(inst.data);
        } catch (const Error&) {
          // FP is reported as null for datasets with a zero column.
        }
        inst.model.emplace(inst.data);
      }
      out.instances.push_back(std::move(inst));
    }
  } catch (const Error& e) {
    out.error = e.what();
  }
  return out;
}

CellResult RunCell(const DatasetSource& source, const PreparedDataset& prepared,
                   const AlgorithmConfig& alg, const BenchConfig& config) {
  CellResult cell;
  cell.dataset = source.name;
  cell.algorithm = std::string(DisplayName(alg.algorithm));
  if (prepared.error) {
    cell.error = *prepared.error;
    return cell;
  }
  try {
    const SelectorOptions options = alg.options();
    const int runs = source.csv ? config.repeats : static_cast<int>(prepared.instances.size());
    std::vector<VeCurve> curves;
    std::vector<double> elapsed;
    std::vector<double> aucs;
    std::vector<std::vector<double>> thresholds(config.thresholds.size());
    std::vector<std::vector<EvalPoint>> points;
    for (int r = 0; r < runs; ++r) {
      const Instance& inst = prepared.instances[source.csv ? 0 : r];
      SelectionResult res =
          run_selector(alg.algorithm, inst.data, StoppingRule::Cardinality(config.k_max), options);
      elapsed.push_back(res.elapsed_seconds);
      for (auto& w : res.warnings) {
        if (std::find(cell.warnings.begin(), cell.warnings.end(), w) == cell.warnings.end()) {
          cell.warnings.push_back(w);
        }
      }
      // Repeated runs on one CSV dataset are timing repeats: keep one record.
      if (source.csv && r > 0) continue;
      cell.seeds.push_back(inst.seed);
      const int v = inst.data.cols();
      if (static_cast<int>(res.ve_curve.size()) >= v - 1 && v >= 2) {
        aucs.push_back(auc(VeCurve(res.ve_curve.begin(), res.ve_curve.begin() + (v - 1)), v));
      }
      for (size_t t = 0; t < config.thresholds.size(); ++t) {
        double k = kInf;
        try {
          k = k_at_threshold(res.ve_curve, config.thresholds[t]);
        } catch (const Error&) {
        }
        thresholds[t].push_back(k);
      }
      std::vector<EvalPoint> at;
      for (int kk : config.eval_k) {
        const std::span<const int> sel(res.order.data(), static_cast<size_t>(kk));
        EvalPoint p;
        p.k = kk;
        p.ve = res.ve_curve[kk - 1];
        if (inst.unit) p.fp = frame_potential(*inst.unit, sel);
        if (kk < v) p.mi = mutual_information(*inst.model, sel);
        at.push_back(p);
      }
      points.push_back(std::move(at));
      curves.push_back(std::move(res.ve_curve));
      cell.orders.push_back(std::move(res.order));
    }
    cell.median_elapsed_s = Median(elapsed);
    if (aucs.size() == curves.size() && !aucs.empty()) cell.auc = Median(aucs);
    for (size_t t = 0; t < config.thresholds.size(); ++t) {
      cell.k_at.push_back({config.thresholds[t], FiniteOrNull(Median(thresholds[t]))});
    }
    const size_t length = curves.front().size();
    for (size_t k = 0; k < length; ++k) {
      std::vector<double> column;
      for (const auto& c : curves) column.push_back(c[k]);
      cell.ve_curve.push_back(Median(column));
    }
    for (size_t e = 0; e < config.eval_k.size(); ++e) {
      std::vector<double> ve, fp, mi;
      for (const auto& run : points) {
        ve.push_back(run[e].ve);
        if (run[e].fp) fp.push_back(*run[e].fp);
        if (run[e].mi) mi.push_back(*run[e].mi);
      }
      EvalPoint p;
      p.k = config.eval_k[e];
      p.ve = Median(ve);
      if (fp.size() == points.size()) p.fp = Median(fp);
      if (mi.size() == points.size()) p.mi = Median(mi);
      cell.at_k.push_back(p);
    }
  } catch (const std::exception& e) {
    cell = CellResult{};
    cell.dataset = source.name;
    cell.algorithm = std::string(DisplayName(alg.algorithm));
    cell.error = e.what();
  }
  return cell;
}

std::string FormatNumber(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string ThresholdLabel(double n) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "k_%g%%", n);
  return buf;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

SelectorOptions AlgorithmConfig::options() const {
  SelectorOptions o;
  o.sigma = sigma;
  o.lazy = lazy;
  o.rebuild_basis = rebuild_basis;
  o.nipals_tolerance = nipals_tolerance;
  o.nipals_max_iterations = nipals_max_iterations;
  return o;
}

void BenchConfig::Validate() const {
  if (k_max < 1) BadConfig("k_max must be >= 1");
  if (repeats < 1) BadConfig("repeats must be >= 1");
  if (parallelism < 1) BadConfig("parallelism must be >= 1");
  for (double n : thresholds) {
    if (!(n > 0.0 && n <= 100.0)) BadConfig("thresholds must lie in (0, 100]");
  }
  for (int k : eval_k) {
    if (k < 1 || k > k_max) BadConfig("eval_k entries must lie in [1, k_max]");
  }
  std::set<std::string> names;
  for (const auto& d : datasets) {
    if (d.name.empty()) BadConfig("dataset without a name");
    if (!names.insert(d.name).second) BadConfig("duplicate dataset name '" + d.name + "'");
    if (d.csv.has_value() == d.sim.has_value()) {
      BadConfig("dataset '" + d.name + "' needs exactly one of 'csv' and 'sim'");
    }
    if (d.sim) {
      if (d.sim->m < 2) BadConfig("dataset '" + d.name + "': m must be >= 2");
      int v = kSim1Columns;
      if (d.sim->kind == SimSpec::Kind::kSim2) {
        if (d.sim->u < 1 || d.sim->u >= d.sim->v) {
          BadConfig("dataset '" + d.name + "': need 1 <= u < v");
        }
        v = d.sim->v;
      }
      if (k_max > v) BadConfig("k_max exceeds v of dataset '" + d.name + "'");
    }
  }
  std::set<Algorithm> seen;
  for (const auto& a : algorithms) {
    if (!seen.insert(a.algorithm).second) {
      BadConfig("algorithm '" + std::string(Id(a.algorithm)) + "' listed twice");
    }
    if (a.sigma && !(*a.sigma > 0.0)) BadConfig("sigma must be > 0");
    if (a.algorithm == Algorithm::kUfs && k_max < 2) BadConfig("UFS needs k_max >= 2");
  }
}

BenchConfig parse_config(const std::string& json_text) {
  return ConfigFromJson(ParseJson(json_text));
}

BenchConfig load_config(const std::filesystem::path& path) {
  return parse_config(ReadFile(path));
}

bool BenchmarkReport::failed() const {
  return std::any_of(cells.begin(), cells.end(), [](const auto& c) { return c.error.has_value(); });
}

BenchmarkReport run_benchmark(const BenchConfig& config) {
  config.Validate();
  BenchmarkReport report;
  report.config = config;

  std::vector<PreparedDataset> prepared;
  for (const auto& d : config.datasets) prepared.push_back(Prepare(d, config));

  const size_t n_alg = config.algorithms.size();
  report.cells.resize(config.datasets.size() * n_alg);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < report.cells.size(); i = next++) {
      const size_t d = i / n_alg;
      report.cells[i] = RunCell(config.datasets[d], prepared[d], config.algorithms[i % n_alg],
                                config);
    }
  };
  const int threads = std::min<int>(config.parallelism, static_cast<int>(report.cells.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (size_t d = 0; d < config.datasets.size(); ++d) {
    const std::span<CellResult> row(report.cells.data() + d * n_alg, n_alg);
    std::map<std::string, VeCurve> curves;
    std::optional<double> fsca_time;
    for (const auto& c : row) {
      if (c.error) continue;
      curves[c.algorithm] = c.ve_curve;
      if (c.algorithm == DisplayName(Algorithm::kFsca)) fsca_time = c.median_elapsed_s;
    }
    std::map<std::string, double> r;
    try {
      if (!curves.empty()) r = relative_performance(curves);
    } catch (const Error&) {
      r.clear();
    }
    for (auto& c : row) {
      if (c.error) continue;
      if (auto it = r.find(c.algorithm); it != r.end()) c.r = it->second;
      if (fsca_time && c.median_elapsed_s > 0.0) c.speedup = *fsca_time / c.median_elapsed_s;
      if (c.algorithm == DisplayName(Algorithm::kFsca)) c.speedup = 1.0;
    }
  }
  return report;
}

std::map<std::string, double> measure_speedup(const Dataset& data, int k, int repeats,
                                              std::span<const Algorithm> algorithms) {
  if (repeats < 3) throw Error(ErrorCode::kInvalidArgument, "measure_speedup needs repeats >= 3");
  auto median_time = [&](Algorithm a) {
    std::vector<double> t;
    for (int r = 0; r < repeats; ++r) {
      t.push_back(run_selector(a, data, StoppingRule::Cardinality(k)).elapsed_seconds);
    }
    return Median(t);
  };
  const double fsca = median_time(Algorithm::kFsca);
  std::map<std::string, double> out;
  out[std::string(DisplayName(Algorithm::kFsca))] = 1.0;
  for (Algorithm a : algorithms) {
    if (a == Algorithm::kFsca) continue;
    out[std::string(DisplayName(a))] = fsca / median_time(a);
  }
  return out;
}

std::string report_to_json(const BenchmarkReport& report) {
  json j;
  j["schema_version"] = report.schema_version;
  j["config"] = ToJson(report.config);
  j["cells"] = json::array();
  for (const auto& c : report.cells) j["cells"].push_back(ToJson(c));
  return j.dump(2);
}

BenchmarkReport report_from_json(const std::string& json_text) {
  const json j = ParseJson(json_text);
  try {
    BenchmarkReport report;
    report.schema_version = j.at("schema_version").get<std::string>();
    if (report.schema_version.substr(0, 2) != std::string(kReportSchemaVersion).substr(0, 2)) {
      throw Error(ErrorCode::kParseError,
                  "unsupported report schema " + report.schema_version);
    }
    report.config = ConfigFromJson(j.at("config"));
    for (const auto& c : j.at("cells")) report.cells.push_back(CellFromJson(c));
    return report;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("malformed report: ") + e.what());
  }
}

std::string report_to_csv(const BenchmarkReport& report) {
  std::ostringstream out;
  out << "dataset,algorithm,auc,r,median_elapsed_s,speedup";
  for (double n : report.config.thresholds) out << ',' << ThresholdLabel(n);
  out << '\n';
  auto opt = [](const std::optional<double>& x) { return x ? FormatNumber(*x) : std::string(); };
  for (const auto& c : report.cells) {
    out << CsvField(c.dataset) << ',' << CsvField(c.algorithm) << ',' << opt(c.auc) << ','
        << opt(c.r) << ',' << (c.error ? "" : FormatNumber(c.median_elapsed_s)) << ','
        << opt(c.speedup);
    for (size_t t = 0; t < report.config.thresholds.size(); ++t) {
      out << ',' << (t < c.k_at.size() ? opt(c.k_at[t].k) : std::string());
    }
    out << '\n';
  }
  return out.str();
}

void emit_report(const BenchmarkReport& report, const std::filesystem::path& path,
                 ReportFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out << (format == ReportFormat::kJson ? report_to_json(report) + "\n" : report_to_csv(report));
  if (!out) throw Error(ErrorCode::kIoError, "failed writing " + path.string());
}

BenchmarkReport read_report(const std::filesystem::path& path) {
  return report_from_json(ReadFile(path));
}

}  // namespace varsel
