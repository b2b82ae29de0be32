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

#include "fzfeat/catalog.hpp"
#include "fzfeat/global_classes.hpp"
#include "fzfeat/graph.hpp"
#include "fzfeat/model.hpp"
#include "fzfeat/stats.hpp"

namespace fzfeat {

std::array<double, 27> variable_features(const ModelIndex& index);
std::array<double, 18> domain_features(const ModelIndex& index);
std::array<double, 27> constraint_features(const ModelIndex& index);
std::array<double, 29> global_constraint_features(const ModelIndex& index,
                                                  const GlobalClassTable& table = GlobalClassTable::builtin());
std::array<double, 11> solving_features(const Model& model);

// The four domain-based objective values for given population statistics of
// {dom(x) : x in V}: dom, dom/mu, (dom-mu)/sigma, dom/deg.
std::array<double, 4> objective_ratios(double value, double mean, double stddev, double deg_or_total);

// -1 everywhere for satisfaction goals or when the objective is not a free
// variable; the graph-based four are -1 when `graphs` timed out.
std::array<double, 12> objective_features(const ModelIndex& index, const GraphFeatures& graphs);

struct StaticOptions {
  std::chrono::steady_clock::duration graph_budget = kDefaultGraphBudget;
  const GlobalClassTable* global_classes = nullptr;  // builtin when null
};

// The 144 static features in catalog order; the dynamic block is left at -1.
FeatureVector static_features(const Model& resolved, const StaticOptions& options = {});

}  // namespace fzfeat
