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

#include "fzfeat/portfolio.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include <fmt/format.h>

#include "fzfeat/csv.hpp"
#include "fzfeat/model.hpp"
#include "fzfeat/scaler.hpp"

namespace fzfeat {

namespace {

std::vector<std::string> ids_of(const RuntimeMatrix& rt, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (auto s : idx) out.push_back(rt.solvers[s]);
  std::sort(out.begin(), out.end());
  return out;
}

// Best solving member per instance, the timeout when none solves.
Outcome best_of(const RuntimeMatrix& rt, std::size_t i, const std::vector<std::size_t>& members) {
  Outcome o{false, rt.timeout};
  for (auto s : members)
    if (rt.solved[i][s] && (!o.solved || rt.time[i][s] < o.time)) o = {true, rt.time[i][s]};
  return o;
}

struct SubsetScore {
  std::size_t solved = 0;
  double time = 0;
  std::vector<std::string> ids;

  // True when this is strictly preferable to `o`.
  bool better(const SubsetScore& o) const {
    if (solved != o.solved) return solved > o.solved;
    if (time != o.time) return time < o.time;
    return ids < o.ids;
  }
};

SubsetScore score_subset(const RuntimeMatrix& rt, const std::vector<std::size_t>& members) {
  SubsetScore sc;
  for (std::size_t i = 0; i < rt.n_instances(); ++i) {
    Outcome o = best_of(rt, i, members);
    sc.solved += o.solved;
    sc.time += o.time;
  }
  sc.ids = ids_of(rt, members);
  return sc;
}

Outcome static_choice(const RuntimeMatrix& rt, std::size_t i, std::size_t s) {
  return rt.solved[i][s] ? Outcome{true, rt.time[i][s]} : Outcome{false, rt.timeout};
}

double squared_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0;
  for (std::size_t j = 0; j < a.size(); ++j) d += (a[j] - b[j]) * (a[j] - b[j]);
  return d;
}

}  // namespace

std::size_t RuntimeMatrix::solver_index(std::string_view id) const {
  auto it = std::find(solvers.begin(), solvers.end(), id);
  if (it == solvers.end()) throw Error(fmt::format("unknown solver '{}'", id));
  return static_cast<std::size_t>(it - solvers.begin());
}

RuntimeMatrix RuntimeMatrix::subset(const std::vector<std::size_t>& rows) const {
  RuntimeMatrix r;
  r.solvers = solvers;
  r.timeout = timeout;
  for (auto i : rows) {
    r.instances.push_back(instances.at(i));
    r.time.push_back(time.at(i));
    r.solved.push_back(solved.at(i));
    r.feat_time.push_back(feat_time.at(i));
  }
  return r;
}

void RuntimeMatrix::validate() const {
  if (time.size() != instances.size() || solved.size() != instances.size() || feat_time.size() != instances.size())
    throw Error("runtime matrix: table sizes differ from the instance count");
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (time[i].size() != solvers.size() || solved[i].size() != solvers.size())
      throw Error(fmt::format("runtime matrix: row '{}' has the wrong width", instances[i]));
    if (feat_time[i] < 0) throw Error(fmt::format("runtime matrix: negative feature time for '{}'", instances[i]));
    for (std::size_t s = 0; s < solvers.size(); ++s) {
      double t = time[i][s];
      if (!(t >= 0 && t <= timeout))
        throw Error(fmt::format("runtime matrix: time {} for ({}, {}) outside [0, {}]", t, instances[i], solvers[s],
                                timeout));
      if (solved[i][s] && t >= timeout)
        throw Error(fmt::format("runtime matrix: ({}, {}) solved at the timeout", instances[i], solvers[s]));
    }
  }
}

RuntimeMatrix RuntimeMatrix::parse_csv(std::string_view text, double timeout) {
  auto rows = fzfeat::parse_csv(text);
  if (rows.empty()) throw Error("runtimes CSV: empty");
  const auto& header = rows[0];
  if (header.size() < 2) throw Error("runtimes CSV: need an instance column and at least one solver");
  RuntimeMatrix rt;
  rt.timeout = timeout;
  std::size_t width = header.size();
  bool has_feat = header.back() == "feat_time";
  std::size_t n_solvers = width - 1 - (has_feat ? 1 : 0);
  if (n_solvers == 0) throw Error("runtimes CSV: no solver columns");
  rt.solvers.assign(header.begin() + 1, header.begin() + 1 + static_cast<std::ptrdiff_t>(n_solvers));
  std::vector<std::string> sorted = rt.solvers;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw Error("runtimes CSV: duplicate solver");
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != width)
      throw Error(fmt::format("runtimes CSV line {}: expected {} fields, got {}", r + 1, width, row.size()));
    rt.instances.push_back(row[0]);
    std::vector<double> times;
    std::vector<bool> ok;
    for (std::size_t s = 0; s < n_solvers; ++s) {
      const std::string& cell = row[s + 1];
      if (cell == "timeout") {
        times.push_back(timeout);
        ok.push_back(false);
      } else if (cell == "fail") {
        times.push_back(0);
        ok.push_back(false);
      } else {
        double t = parse_number(cell, fmt::format("runtimes CSV line {}", r + 1));
        if (t < 0) throw Error(fmt::format("runtimes CSV line {}: negative time", r + 1));
        times.push_back(std::min(t, timeout));
        ok.push_back(t < timeout);
      }
    }
    rt.time.push_back(std::move(times));
    rt.solved.push_back(std::move(ok));
    rt.feat_time.push_back(has_feat ? parse_number(row.back(), fmt::format("runtimes CSV line {}", r + 1)) : 0.0);
  }
  rt.validate();
  return rt;
}

RuntimeMatrix RuntimeMatrix::load_csv(const std::string& path, double timeout) {
  const std::string text = read_file(path);
  try {
    return parse_csv(text, timeout);
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

std::string RuntimeMatrix::to_csv() const {
  std::vector<std::string> header{"instance"};
  header.insert(header.end(), solvers.begin(), solvers.end());
  header.push_back("feat_time");
  std::string out = csv_line(header) + "\n";
  for (std::size_t i = 0; i < instances.size(); ++i) {
    std::vector<std::string> row{instances[i]};
    for (std::size_t s = 0; s < solvers.size(); ++s)
      row.push_back(solved[i][s] ? format_number(time[i][s]) : time[i][s] == 0 ? "fail" : "timeout");
    row.push_back(format_number(feat_time[i]));
    out += csv_line(row) + "\n";
  }
  return out;
}

std::vector<std::size_t> compose_portfolio(const RuntimeMatrix& rt, std::size_t n) {
  const std::size_t m = rt.n_solvers();
  if (n < 2 || n > m) throw Error(fmt::format("portfolio size {} outside [2, {}]", n, m));
  std::vector<std::size_t> cur(n), best;
  std::iota(cur.begin(), cur.end(), 0);
  SubsetScore best_score;
  for (;;) {
    SubsetScore sc = score_subset(rt, cur);
    if (best.empty() || sc.better(best_score)) {
      best = cur;
      best_score = std::move(sc);
    }
    std::size_t k = n;
    while (k > 0 && cur[k - 1] == m - n + (k - 1)) --k;
    if (k == 0) break;
    ++cur[k - 1];
    for (std::size_t j = k; j < n; ++j) cur[j] = cur[j - 1] + 1;
  }
  return best;
}

Outcome simulate_instance(std::size_t choice, std::size_t i, const RuntimeMatrix& rt, std::size_t backup,
                          bool charge_features) {
  const double T = rt.timeout;
  double used = charge_features ? rt.feat_time[i] : 0.0;
  if (used >= T) return {false, T};
  if (rt.solved[i][choice] && used + rt.time[i][choice] < T) return {true, used + rt.time[i][choice]};
  used = std::min(T, used + rt.time[i][choice]);
  if (backup != choice && used < T && rt.solved[i][backup] && used + rt.time[i][backup] < T)
    return {true, used + rt.time[i][backup]};
  return {false, T};
}

std::size_t select_solver_knn(const std::vector<std::vector<double>>& train_features, const RuntimeMatrix& train_rt,
                              const std::vector<double>& query, const std::vector<std::size_t>& portfolio,
                              std::size_t k) {
  if (portfolio.empty()) throw Error("k-NN selection needs a non-empty portfolio");
  if (train_features.empty()) throw Error("k-NN selection needs training instances");
  if (k == 0) throw Error("k-NN selection needs k >= 1");
  std::vector<std::pair<double, std::size_t>> dist;
  dist.reserve(train_features.size());
  for (std::size_t r = 0; r < train_features.size(); ++r) dist.emplace_back(squared_distance(train_features[r], query), r);
  k = std::min(k, dist.size());
  std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(k), dist.end());
  std::size_t best = portfolio.front();
  std::size_t best_solved = 0;
  double best_time = 0;
  bool first = true;
  for (auto s : portfolio) {
    std::size_t solved = 0;
    double total = 0;
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t r = dist[j].second;
      solved += train_rt.solved[r][s];
      total += train_rt.solved[r][s] ? train_rt.time[r][s] : train_rt.timeout;
    }
    bool take = first || solved > best_solved || (solved == best_solved && total < best_time) ||
                (solved == best_solved && total == best_time && train_rt.solvers[s] < train_rt.solvers[best]);
    if (take) {
      best = s;
      best_solved = solved;
      best_time = total;
      first = false;
    }
  }
  return best;
}

std::size_t single_best_solver(const RuntimeMatrix& rt, const std::vector<std::size_t>& candidates) {
  if (candidates.empty()) throw Error("no candidate solvers");
  std::size_t best = candidates.front();
  SubsetScore best_score = score_subset(rt, {best});
  for (auto s : candidates) {
    SubsetScore sc = score_subset(rt, {s});
    if (sc.better(best_score)) {
      best = s;
      best_score = std::move(sc);
    }
  }
  return best;
}

Baselines baselines(const RuntimeMatrix& rt, const std::vector<std::size_t>& portfolio) {
  Baselines b;
  std::vector<std::size_t> all(rt.n_solvers());
  std::iota(all.begin(), all.end(), 0);
  std::size_t sbs = single_best_solver(rt, all);
  for (std::size_t i = 0; i < rt.n_instances(); ++i) {
    b.vbs.add(best_of(rt, i, portfolio));
    b.sbs.add(static_choice(rt, i, sbs));
  }
  return b;
}

std::vector<std::vector<std::vector<std::size_t>>> make_folds(std::size_t n, std::size_t folds,
                                                              const std::vector<std::uint64_t>& seeds) {
  if (folds < 2) throw Error("need at least 2 folds");
  if (n < folds) throw Error(fmt::format("{} instances cannot be split into {} folds", n, folds));
  std::vector<std::vector<std::vector<std::size_t>>> out;
  for (auto seed : seeds) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    // Fisher-Yates with raw engine output, identical on every platform.
    std::mt19937_64 rng(seed);
    for (std::size_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[static_cast<std::size_t>(rng() % (i + 1))]);
    std::vector<std::vector<std::size_t>> rep;
    std::size_t at = 0;
    for (std::size_t f = 0; f < folds; ++f) {
      std::size_t size = n / folds + (f < n % folds ? 1 : 0);
      std::vector<std::size_t> fold(perm.begin() + static_cast<std::ptrdiff_t>(at),
                                    perm.begin() + static_cast<std::ptrdiff_t>(at + size));
      std::sort(fold.begin(), fold.end());
      rep.push_back(std::move(fold));
      at += size;
    }
    out.push_back(std::move(rep));
  }
  return out;
}

SimulationReport cross_validate(const std::vector<std::vector<double>>& features, const RuntimeMatrix& rt,
                                const SimulationConfig& config) {
  rt.validate();
  const std::size_t N = rt.n_instances();
  if (features.size() != N) throw Error("feature rows do not match the runtime matrix");
  if (rt.n_solvers() < 1) throw Error("runtime matrix has no solvers");
  if (config.seeds.empty()) throw Error("no cross-validation seeds");
  std::vector<std::size_t> sizes = config.sizes;
  if (sizes.empty())
    for (std::size_t n = 2; n <= std::min<std::size_t>(11, rt.n_solvers()); ++n)
      sizes.push_back(n);
  for (auto n : sizes)
    if (n < 2 || n > rt.n_solvers()) throw Error(fmt::format("portfolio size {} outside [2, {}]", n, rt.n_solvers()));
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  std::optional<std::size_t> fixed_backup;
  if (config.backup) fixed_backup = rt.solver_index(*config.backup);

  const auto folds = make_folds(N, config.folds, config.seeds);
  const std::size_t A = std::size(kApproaches);
  const std::size_t R = config.seeds.size();
  // scores[size][approach][repetition]
  std::vector<std::vector<std::vector<Score>>> scores(sizes.size(), std::vector<std::vector<Score>>(A, std::vector<Score>(R)));
  SimulationReport report;
  report.test_counts.assign(N, 0);
  std::vector<std::size_t> all(rt.n_solvers());
  std::iota(all.begin(), all.end(), 0);

  for (std::size_t rep = 0; rep < R; ++rep) {
    for (const auto& test : folds[rep]) {
      ++report.evaluations;
      std::vector<bool> in_test(N, false);
      for (auto i : test) in_test[i] = true;
      std::vector<std::size_t> train;
      for (std::size_t i = 0; i < N; ++i)
        if (!in_test[i]) train.push_back(i);
      RuntimeMatrix train_rt = rt.subset(train);
      std::vector<std::vector<double>> raw_train;
      for (auto i : train) raw_train.push_back(features[i]);
      Scaler scaler = Scaler::fit(raw_train);
      auto scaled_train = scaler.apply_rows(raw_train);
      std::size_t sbs = single_best_solver(train_rt, all);
      std::size_t backup = fixed_backup.value_or(sbs);
      for (auto i : test) ++report.test_counts[i];

      for (std::size_t si = 0; si < sizes.size(); ++si) {
        auto portfolio = compose_portfolio(train_rt, sizes[si]);
        auto oracle_set = portfolio;
        if (std::find(oracle_set.begin(), oracle_set.end(), backup) == oracle_set.end()) oracle_set.push_back(backup);
        for (auto i : test) {
          std::size_t knn = select_solver_knn(scaled_train, train_rt, scaler.apply(features[i]), portfolio, config.k);
          std::size_t raw = select_solver_knn(raw_train, train_rt, features[i], portfolio, config.k);
          Outcome outcomes[] = {
              best_of(rt, i, oracle_set),
              static_choice(rt, i, sbs),
              simulate_instance(knn, i, rt, backup, config.charge_feature_time),
              simulate_instance(raw, i, rt, backup, config.charge_feature_time),
              simulate_instance(backup, i, rt, backup, false),
          };
          for (std::size_t a = 0; a < A; ++a) scores[si][a][rep].add(outcomes[a]);
        }
      }
    }
  }

  for (std::size_t si = 0; si < sizes.size(); ++si) {
    std::vector<SimulationRow> rows;
    for (std::size_t a = 0; a < A; ++a) {
      SimulationRow row;
      row.approach = kApproaches[a];
      row.n = sizes[si];
      row.per_repetition = scores[si][a];
      for (const auto& s : scores[si][a]) {
        row.score.solved += s.solved;
        row.score.evaluations += s.evaluations;
        row.score.total_time += s.total_time;
      }
      rows.push_back(std::move(row));
    }
    const double vbs = rows[0].score.psi(), sbs = rows[1].score.psi();
    for (auto& row : rows)
      if (vbs > sbs) row.gap_closure = (row.score.psi() - sbs) / (vbs - sbs);
    report.rows.insert(report.rows.end(), rows.begin(), rows.end());
  }
  return report;
}

const SimulationRow& SimulationReport::row(std::string_view approach, std::size_t n) const {
  for (const auto& r : rows)
    if (r.approach == approach && r.n == n) return r;
  throw Error(fmt::format("no report row for ({}, {})", approach, n));
}

double SimulationReport::scaling_delta(std::size_t n) const {
  return row("kNN", n).score.psi() - row("kNN-raw", n).score.psi();
}

std::string SimulationReport::to_csv() const {
  std::string out = "approach,n,psi,ast,solved,evaluations,gap_closure\n";
  for (const auto& r : rows)
    out += fmt::format("{},{},{:.4f},{:.4f},{},{},{}\n", r.approach, r.n, r.score.psi(), r.score.ast(), r.score.solved,
                       r.score.evaluations, r.gap_closure ? fmt::format("{:.4f}", *r.gap_closure) : "NA");
  return out;
}

std::string SimulationReport::to_table() const {
  std::string out = fmt::format("{:<8} {:>3} {:>9} {:>10} {:>12}\n", "approach", "n", "PSI (%)", "AST (s)", "gap closed");
  std::size_t last_n = 0;
  for (const auto& r : rows) {
    if (r.n != last_n && last_n != 0) out += fmt::format("{:<8} {:>3} scaling delta (kNN - kNN-raw): {:+.4f} PSI\n", "", last_n, scaling_delta(last_n));
    last_n = r.n;
    std::string gap = r.gap_closure ? fmt::format("{:.2f}%", 100 * *r.gap_closure) : "n/a";
    out += fmt::format("{:<8} {:>3} {:>9.4f} {:>10.4f} {:>12}\n", r.approach, r.n, r.score.psi(), r.score.ast(), gap);
  }
  if (last_n) out += fmt::format("{:<8} {:>3} scaling delta (kNN - kNN-raw): {:+.4f} PSI\n", "", last_n, scaling_delta(last_n));
  std::size_t lo = test_counts.empty() ? 0 : *std::min_element(test_counts.begin(), test_counts.end());
  std::size_t hi = test_counts.empty() ? 0 : *std::max_element(test_counts.begin(), test_counts.end());
  out += fmt::format("{} fold evaluations; each instance tested {} time(s)\n", evaluations,
                     lo == hi ? std::to_string(lo) : fmt::format("{}..{}", lo, hi));
  return out;
}

}  // namespace fzfeat
