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

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fzfeat/catalog.hpp"
#include "fzfeat/global_classes.hpp"
#include "fzfeat/graph.hpp"
#include "fzfeat/probe.hpp"

namespace fzfeat {

// External MiniZinc-to-FlatZinc compiler. Arguments may contain {mzn} and
// {fzn}.
struct CompilerConfig {
  std::string executable = "mzn2fzn";
  std::vector<std::string> args{"--output-fzn-to-file", "{fzn}", "{mzn}"};
  std::chrono::milliseconds cap{900'000};

  // FZFEAT_MZN2FZN, when set, overrides the executable.
  static CompilerConfig from_env();
};

struct ExtractOptions {
  std::chrono::milliseconds graph_budget = kDefaultGraphBudget;
  std::optional<SolverAdapter> adapter;  // probe skipped when empty
  CompilerConfig compiler;
  const GlobalClassTable* global_classes = nullptr;
};

struct ExtractResult {
  std::string instance;
  bool ok = false;
  std::string error;  // why the instance was skipped
  FeatureVector features;
  Timings timings;
  double t_dynamic = 0;
  bool probe_failed = false;  // probe ran but gave no statistics
  std::string transcript;
};

// Runs compile (for .mzn and .xml), static extraction and the dynamic probe
// on one input. Never throws for problems with the instance itself.
ExtractResult extract_instance(const std::string& path, const ExtractOptions& options);

// Files named directly plus .fzn, .mzn and .xml files found recursively
// under directories; sorted, duplicates removed. Throws Error for a path
// that does not exist.
std::vector<std::string> collect_inputs(const std::vector<std::string>& paths);

// extract_instance over `inputs` on up to `workers` threads. Results follow
// input order; `on_done` is called once per instance, never concurrently.
std::vector<ExtractResult> extract_batch(const std::vector<std::string>& inputs, const ExtractOptions& options,
                                         unsigned workers,
                                         const std::function<void(const ExtractResult&)>& on_done = {});

}  // namespace fzfeat
