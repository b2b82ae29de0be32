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

#include <array>
#include <chrono>
#include <string>
#include <string_view>
#include <vector>

#include "fzfeat/model.hpp"
#include "fzfeat/process.hpp"

namespace fzfeat {

// The six counters read from a solver's statistics output; -1 when absent.
struct SolverStats {
  double solutions = -1;
  double propagations = -1;
  double nodes = -1;
  double failures = -1;
  double peak_depth = -1;
  double peak_memory = -1;  // as printed by the solver, unit per dialect
};

// Registered dialects: "gecode" (`%%  nodes: 12` lines and
// `%%%mzn-stat: nodes=12` lines) and "mzn-stat" (standard MiniZinc
// statistics keys only). Throws Error for any other name.
SolverStats parse_solver_stats(std::string_view output, std::string_view dialect);
const std::vector<std::string>& solver_dialects();

// External FlatZinc solver. Arguments may contain {fzn}, {time_ms} and
// {time_s}, substituted per run.
struct SolverAdapter {
  std::string executable;
  std::vector<std::string> args;
  std::string dialect = "gecode";
  std::chrono::milliseconds cap{2000};
  std::chrono::milliseconds kill_after{5000};

  std::vector<std::string> command(const std::string& fzn, std::chrono::milliseconds cap) const;

  // JSON object with keys executable, args, dialect, cap_ms, kill_after_ms.
  // FZFEAT_SOLVER, when set, overrides the executable.
  static SolverAdapter from_json(std::string_view text);
  static SolverAdapter load(const std::string& path);
};

struct ProbeRun {
  bool ok = false;      // exited normally with status 0
  bool killed = false;  // force-killed after kill_after
  std::string error;
  SolverStats stats;
  double wall_seconds = 0;
  std::string transcript;
};

// Runs the adapter on `fzn` with the time cap, force-killing after
// kill_after. Throws ExecutableNotFound or SpawnError.
ProbeRun run_probe(const std::string& fzn, const SolverAdapter& adapter, std::chrono::milliseconds cap,
                   std::chrono::milliseconds kill_after);

struct Timings {
  double t_compile = 0;  // 0 for native FlatZinc input
  double t_static = 0;
};

// The 11 dynamic features. `run` is null when the probe was skipped; a
// failed or killed run also leaves the first eight at -1.
std::array<double, 11> dynamic_features(const ProbeRun* run, std::size_t n_constraints, const Timings& timings);

}  // namespace fzfeat
