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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fzfeat {

inline constexpr double kDefaultTimeout = 1800;

// Recorded solving times, instance x solver. An entry is solved iff its
// flag is set; unsolved entries are either timeouts (time = timeout) or
// premature failures (time = 0).
struct RuntimeMatrix {
  std::vector<std::string> instances;
  std::vector<std::string> solvers;
  std::vector<std::vector<double>> time;
  std::vector<std::vector<bool>> solved;
  std::vector<double> feat_time;  // feature extraction seconds per instance
  double timeout = kDefaultTimeout;

  std::size_t n_instances() const { return instances.size(); }
  std::size_t n_solvers() const { return solvers.size(); }
  std::size_t solver_index(std::string_view id) const;  // throws Error

  // Rows restricted to `rows`, in that order.
  RuntimeMatrix subset(const std::vector<std::size_t>& rows) const;

  // Throws Error unless 0 <= time <= timeout, solved entries are below the
  // timeout, and all tables have matching shapes.
  void validate() const;

  // CSV: header `instance,<solver>...[,feat_time]`; cells are seconds,
  // `timeout` (unsolved at the timeout) or `fail` (unsolved at 0 s).
  // Numbers at or above the timeout read as timeouts.
  static RuntimeMatrix parse_csv(std::string_view text, double timeout = kDefaultTimeout);
  static RuntimeMatrix load_csv(const std::string& path, double timeout = kDefaultTimeout);
  std::string to_csv() const;
};

// Optimal size-n subset, 2 <= n <= solvers (solver indices, ascending): most solved instances,
// then least total time (best solving member per instance, the timeout if
// none), then lexicographically smallest list of solver ids.
std::vector<std::size_t> compose_portfolio(const RuntimeMatrix& rt, std::size_t n);

struct Outcome {
  bool solved = false;
  double time = 0;
};

// Runs `choice`, then `backup` in what remains of the timeout. Feature
// extraction time is charged first when `charge_features` is set.
Outcome simulate_instance(std::size_t choice, std::size_t instance, const RuntimeMatrix& rt, std::size_t backup,
                          bool charge_features = true);

// k-nearest neighbours over the rows of `train_features` (Euclidean, ties
// by row index). `train_rt` holds the same rows. Picks the portfolio member
// solving most neighbours, then least total time on them (unsolved counted
// at the timeout), then smallest id.
std::size_t select_solver_knn(const std::vector<std::vector<double>>& train_features, const RuntimeMatrix& train_rt,
                              const std::vector<double>& query, const std::vector<std::size_t>& portfolio,
                              std::size_t k);

// The solver solving most instances of `rt`, then least total time, then
// smallest id.
std::size_t single_best_solver(const RuntimeMatrix& rt, const std::vector<std::size_t>& candidates);

struct Score {
  std::size_t solved = 0;
  std::size_t evaluations = 0;
  double total_time = 0;

  double psi() const { return evaluations ? 100.0 * static_cast<double>(solved) / static_cast<double>(evaluations) : 0; }
  double ast() const { return evaluations ? total_time / static_cast<double>(evaluations) : 0; }
  void add(const Outcome& o) {
    ++evaluations;
    solved += o.solved;
    total_time += o.time;
  }
};

struct Baselines {
  Score vbs, sbs;
};

// VBS: fastest solving member of `portfolio` per instance. SBS: the single
// best solver of the whole matrix. Neither is charged feature time.
Baselines baselines(const RuntimeMatrix& rt, const std::vector<std::size_t>& portfolio);

struct SimulationConfig {
  std::size_t k = 10;
  std::size_t folds = 5;
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  std::vector<std::size_t> sizes;  // empty: 2 .. min(11, solvers)
  std::optional<std::string> backup;  // default: SBS of the training fold
  bool charge_feature_time = true;
};

// Approach names in report order.
inline constexpr const char* kApproaches[] = {"VBS", "SBS", "kNN", "kNN-raw", "backup"};

struct SimulationRow {
  std::string approach;
  std::size_t n = 0;
  Score score;
  std::vector<Score> per_repetition;
  // (PSI - PSI_SBS) / (PSI_VBS - PSI_SBS); absent when VBS does not beat SBS.
  std::optional<double> gap_closure;
};

struct SimulationReport {
  std::vector<SimulationRow> rows;  // sizes ascending, approaches in kApproaches order
  std::vector<std::size_t> test_counts;  // times each instance was in a test fold
  std::size_t evaluations = 0;           // fold evaluations (repetitions x folds)

  const SimulationRow& row(std::string_view approach, std::size_t n) const;
  // PSI(kNN) - PSI(kNN-raw) for size n.
  double scaling_delta(std::size_t n) const;

  std::string to_csv() const;
  std::string to_table() const;
};

// Repeated k-fold cross-validation. For each repetition the instances are
// shuffled with that repetition's seed and cut into folds; every fold is
// tested once against a portfolio, scaler, backup and selector built from
// the remaining folds. `features` rows are raw feature vectors aligned with
// rt.instances. Throws Error when there are fewer instances than folds.
SimulationReport cross_validate(const std::vector<std::vector<double>>& features, const RuntimeMatrix& rt,
                                const SimulationConfig& config);

// Fold assignment used by cross_validate: for each repetition, the list of
// test folds (instance indices).
std::vector<std::vector<std::vector<std::size_t>>> make_folds(std::size_t n_instances, std::size_t folds,
                                                              const std::vector<std::uint64_t>& seeds);

}  // namespace fzfeat
