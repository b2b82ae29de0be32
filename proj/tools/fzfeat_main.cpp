// Copyright 2026 The fzfeat Authors
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

#include <charconv>
#include <filesystem>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "fzfeat/csv.hpp"
#include "fzfeat/dataset.hpp"
#include "fzfeat/pipeline.hpp"
#include "fzfeat/scaler.hpp"
#include "fzfeat/xcsp.hpp"

namespace fs = std::filesystem;
using namespace fzfeat;

namespace {

std::chrono::milliseconds millis(double seconds) {
  return std::chrono::milliseconds(static_cast<long long>(seconds * 1000 + 0.5));
}

// "2..5" or "2,3,7".
std::vector<std::size_t> parse_sizes(const std::string& text) {
  auto number = [&](std::string_view s) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty()) throw Error("bad --sizes value: " + text);
    return v;
  };
  std::vector<std::size_t> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    std::size_t lo = number(std::string_view(text).substr(0, dots)), hi = number(std::string_view(text).substr(dots + 2));
    if (lo > hi) throw Error("bad --sizes range: " + text);
    for (std::size_t n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  for (const auto& field : parse_csv(text).at(0)) out.push_back(number(field));
  return out;
}

std::string transcript_name(const std::string& instance) {
  std::string s;
  for (char c : fs::path(instance).relative_path().string()) s += c == '/' ? '_' : c;
  return s + ".log";
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-")
    std::cout << text;
  else
    write_file(path, text);
}

struct ExtractArgs {
  std::vector<std::string> inputs;
  std::string output = "-";
  std::string json;
  std::string adapter;
  std::string transcripts;
  std::string global_classes;
  double graph_budget = 2;
  double probe_cap = 2;
  double kill_after = 5;
  double compile_cap = 900;
  bool no_probe = false;
  unsigned workers = 1;
};

int cmd_extract(const ExtractArgs& a) {
  if (a.graph_budget <= 0 || a.probe_cap <= 0 || a.kill_after <= 0 || a.compile_cap <= 0)
    throw Error("durations must be positive");
  if (a.probe_cap >= a.kill_after) throw Error("--probe-cap must be below --kill-after");
  auto inputs = collect_inputs(a.inputs);
  if (inputs.empty()) throw Error("no .fzn, .mzn or .xml inputs found");

  ExtractOptions o;
  o.graph_budget = millis(a.graph_budget);
  o.compiler = CompilerConfig::from_env();
  o.compiler.cap = millis(a.compile_cap);
  std::optional<GlobalClassTable> classes;
  if (!a.global_classes.empty()) {
    classes = GlobalClassTable::load(a.global_classes);
    o.global_classes = &*classes;
  }
  if (!a.no_probe && !a.adapter.empty()) {
    o.adapter = SolverAdapter::load(a.adapter);
    o.adapter->cap = millis(a.probe_cap);
    o.adapter->kill_after = millis(a.kill_after);
  }

  std::size_t warnings = 0;
  auto results = extract_batch(inputs, o, a.workers, [&](const ExtractResult& r) {
    if (!r.ok) {
      ++warnings;
      fmt::print(stderr, "warning: {}: skipped: {}\n", r.instance, r.error);
      return;
    }
    if (r.probe_failed) {
      ++warnings;
      fmt::print(stderr, "warning: {}: probe failed, dynamic counters set to -1\n", r.instance);
    }
    fmt::print(stderr, "{}: compile {:.3f} s, static {:.3f} s, dynamic {:.3f} s\n", r.instance, r.timings.t_compile,
               r.timings.t_static, r.t_dynamic);
  });

  FeatureTable table;
  for (const auto& r : results)
    if (r.ok) {
      table.instances.push_back(r.instance);
      table.rows.emplace_back(r.features.values.begin(), r.features.values.end());
    }
  write_output(a.output, table.to_csv());
  if (!a.json.empty()) write_output(a.json, table.to_json());

  if (o.adapter && !(a.transcripts.empty() && a.output == "-")) {
    fs::path dir = a.transcripts.empty() ? fs::path(a.output).concat(".transcripts") : fs::path(a.transcripts);
    fs::create_directories(dir);
    for (const auto& r : results)
      if (!r.transcript.empty()) write_file((dir / transcript_name(r.instance)).string(), r.transcript);
  }
  fmt::print(stderr, "{} of {} instances extracted, {} warning(s)\n", table.instances.size(), inputs.size(), warnings);
  return 0;
}

struct DatasetArgs {
  std::string features, runtimes, out_dir;
  double timeout = kDefaultTimeout;
  bool scaled = false;
  bool synthetic = false;
  SyntheticOptions synth;
};

int cmd_dataset(const DatasetArgs& a) {
  FeatureTable features;
  RuntimeMatrix rt;
  if (a.synthetic) {
    auto d = make_synthetic_dataset(a.synth);
    features = std::move(d.features);
    rt = std::move(d.runtimes);
  } else {
    if (a.features.empty() || a.runtimes.empty()) throw Error("--features and --runtimes are required");
    features = FeatureTable::load_csv(a.features);
    rt = RuntimeMatrix::load_csv(a.runtimes, a.timeout);
    auto aligned = align_features(features, rt);
    features.instances = rt.instances;
    features.rows = std::move(aligned);
  }
  fs::create_directories(a.out_dir);
  write_file((fs::path(a.out_dir) / "features.csv").string(), features.to_csv());
  write_file((fs::path(a.out_dir) / "runtimes.csv").string(), rt.to_csv());
  if (a.scaled) {
    auto scaler = Scaler::fit(features.rows);
    scaler.save((fs::path(a.out_dir) / "scaler.txt").string());
    const auto& cat = feature_catalog();
    std::vector<std::string> header{"instance"};
    for (auto j : scaler.kept()) header.push_back(cat[j].name);
    std::string csv = csv_line(header) + "\n";
    for (std::size_t i = 0; i < features.rows.size(); ++i) {
      std::vector<std::string> row{features.instances[i]};
      for (double v : scaler.apply(features.rows[i])) row.push_back(format_number(v));
      csv += csv_line(row) + "\n";
    }
    write_file((fs::path(a.out_dir) / "features_scaled.csv").string(), csv);
    fmt::print(stderr, "{} of {} features kept after constant removal\n", scaler.kept().size(), kNumFeatures);
  }
  fmt::print(stderr, "{} instances, {} solvers written to {}\n", rt.n_instances(), rt.n_solvers(), a.out_dir);
  return 0;
}

struct SimulateArgs {
  std::string features, runtimes;
  std::string output;
  std::string sizes;
  std::string backup;
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  std::size_t k = 10;
  std::size_t folds = 5;
  double timeout = kDefaultTimeout;
  bool no_feature_time = false;
};

int cmd_simulate(const SimulateArgs& a) {
  auto features = FeatureTable::load_csv(a.features);
  auto rt = RuntimeMatrix::load_csv(a.runtimes, a.timeout);
  auto x = align_features(features, rt);
  SimulationConfig cfg;
  cfg.k = a.k;
  cfg.folds = a.folds;
  cfg.seeds = a.seeds;
  if (!a.sizes.empty()) cfg.sizes = parse_sizes(a.sizes);
  if (!a.backup.empty()) cfg.backup = a.backup;
  cfg.charge_feature_time = !a.no_feature_time;
  auto report = cross_validate(x, rt, cfg);
  std::cout << report.to_table();
  if (!a.output.empty()) write_output(a.output, report.to_csv());
  return 0;
}

int cmd_convert(const std::string& input, const std::string& output) {
  write_output(output, translate_to_minizinc(load_xcsp_file(input)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feature extraction and portfolio simulation for constraint models"};
  app.require_subcommand(1);

  std::string conv_in, conv_out = "-";
  auto* convert = app.add_subcommand("convert", "Translate an XCSP 2.1 instance to MiniZinc");
  convert->add_option("input", conv_in, "XCSP .xml file")->required();
  convert->add_option("-o,--output", conv_out, "MiniZinc output file ('-' for stdout)");

  ExtractArgs ex;
  ex.workers = std::max(1u, std::thread::hardware_concurrency());
  auto* extract = app.add_subcommand("extract", "Extract the 155 features from .fzn, .mzn or .xml inputs");
  extract->add_option("inputs", ex.inputs, "Files or directories")->required();
  extract->add_option("-o,--output", ex.output, "Feature CSV ('-' for stdout)");
  extract->add_option("--json", ex.json, "Also write a JSON mirror");
  extract->add_option("--adapter", ex.adapter, "Solver adapter JSON for the dynamic probe");
  extract->add_flag("--no-probe", ex.no_probe, "Skip the dynamic probe");
  extract->add_option("--transcripts", ex.transcripts, "Directory for probe transcripts");
  extract->add_option("--global-classes", ex.global_classes, "Global constraint class table");
  extract->add_option("--graph-budget", ex.graph_budget, "Graph feature budget in seconds")->capture_default_str();
  extract->add_option("--probe-cap", ex.probe_cap, "Solver time cap in seconds")->capture_default_str();
  extract->add_option("--kill-after", ex.kill_after, "Force-kill the probe after seconds")->capture_default_str();
  extract->add_option("--compile-cap", ex.compile_cap, "MiniZinc compile cap in seconds")->capture_default_str();
  extract->add_option("-j,--workers", ex.workers, "Parallel instances")->check(CLI::PositiveNumber);

  DatasetArgs ds;
  auto* dataset = app.add_subcommand("dataset", "Align feature and runtime tables, or generate a synthetic dataset");
  dataset->add_option("--features", ds.features, "Feature CSV");
  dataset->add_option("--runtimes", ds.runtimes, "Runtime CSV");
  dataset->add_option("--out", ds.out_dir, "Output directory")->required();
  dataset->add_option("--timeout", ds.timeout, "Solver timeout in seconds")->capture_default_str();
  dataset->add_flag("--scaled", ds.scaled, "Also write scaled features and the scaler");
  dataset->add_flag("--synthetic", ds.synthetic, "Generate a clustered synthetic dataset");
  dataset->add_option("--instances", ds.synth.instances, "Synthetic instances")->capture_default_str();
  dataset->add_option("--solvers", ds.synth.solvers, "Synthetic solvers")->capture_default_str();
  dataset->add_option("--seed", ds.synth.seed, "Synthetic seed")->capture_default_str();
  dataset->add_option("--cross-solve", ds.synth.cross_solve, "Chance a solver also solves another cluster")
      ->capture_default_str();

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Cross-validate portfolio selection over a dataset");
  simulate->add_option("--features", sim.features, "Feature CSV")->required();
  simulate->add_option("--runtimes", sim.runtimes, "Runtime CSV")->required();
  simulate->add_option("-o,--output", sim.output, "Report CSV");
  simulate->add_option("--sizes", sim.sizes, "Portfolio sizes, e.g. 2..5 or 2,4");
  simulate->add_option("--backup", sim.backup, "Backup solver id (default: training-fold single best)");
  simulate->add_option("-k", sim.k, "Neighbours")->capture_default_str();
  simulate->add_option("--folds", sim.folds, "Folds per repetition")->capture_default_str();
  simulate->add_option("--seeds", sim.seeds, "One seed per repetition")->delimiter(',');
  simulate->add_option("--timeout", sim.timeout, "Solver timeout in seconds")->capture_default_str();
  simulate->add_flag("--no-feature-time", sim.no_feature_time, "Do not charge feature extraction time");

  app.add_subcommand("catalog", "Print the feature catalog");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*convert) return cmd_convert(conv_in, conv_out);
    if (*extract) return cmd_extract(ex);
    if (*dataset) return cmd_dataset(ds);
    if (*simulate) return cmd_simulate(sim);
    std::cout << catalog_table();
    return 0;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 1;
  }
}
