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
#include <string>
#include <string_view>
#include <vector>

#include "fzfeat/portfolio.hpp"

namespace fzfeat {

// Feature rows keyed by instance id. CSV header: `instance` followed by the
// 155 catalog names in vector order.
struct FeatureTable {
  std::vector<std::string> instances;
  std::vector<std::vector<double>> rows;

  static FeatureTable parse_csv(std::string_view text);
  static FeatureTable load_csv(const std::string& path);
  std::string to_csv() const;
  std::string to_json() const;
};

// Feature rows reordered to the runtime matrix's instance order. Fills a
// zero feat_time from the total-time feature when that is non-negative.
// Throws Error listing ids present in only one of the two tables.
std::vector<std::vector<double>> align_features(const FeatureTable& features, RuntimeMatrix& runtimes);

struct SyntheticOptions {
  std::size_t instances = 30;
  std::size_t solvers = 4;
  std::uint64_t seed = 42;
  // Probability that a solver also solves (slowly) an instance outside its
  // own cluster.
  double cross_solve = 0.0;
  // Record unsolved entries as premature failures instead of timeouts.
  bool failures = false;
  // Add one pure-noise feature with a range of 1e6.
  bool wide_noise = true;
  double feat_time = 1.0;
};

struct SyntheticDataset {
  FeatureTable features;
  RuntimeMatrix runtimes;
  std::vector<std::size_t> cluster;  // per instance; solver c is its specialist
};

// Instances fall in one cluster per solver (sizes decreasing with the
// solver index). Feature vectors are cluster centres plus small noise, with
// 41 constant columns; solver c solves exactly the instances of cluster c
// (plus cross_solve extras).
SyntheticDataset make_synthetic_dataset(const SyntheticOptions& options);

}  // namespace fzfeat
