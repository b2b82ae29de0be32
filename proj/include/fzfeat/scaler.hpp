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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fzfeat {

// Constant-feature removal plus linear scaling to [-1, 1], fitted on a
// training matrix. Features whose training min equals max are dropped.
class Scaler {
 public:
  // Throws Error on an empty matrix or rows of unequal length.
  static Scaler fit(const std::vector<std::vector<double>>& train);

  // Scaled values of the kept features; out-of-range values are clamped.
  // Throws Error when the row length differs from the fitted width.
  std::vector<double> apply(const std::vector<double>& row) const;
  std::vector<std::vector<double>> apply_rows(const std::vector<std::vector<double>>& rows) const;

  std::size_t n_features() const { return n_features_; }
  const std::vector<std::size_t>& kept() const { return kept_; }
  const std::vector<double>& mins() const { return mins_; }
  const std::vector<double>& maxs() const { return maxs_; }

  // Text sidecar: header line, "<n_features> <kept>", then one
  // "<index> <min> <max>" line per kept feature.
  std::string serialize() const;
  static Scaler parse(std::string_view text);
  void save(const std::string& path) const;
  static Scaler load(const std::string& path);

  bool operator==(const Scaler&) const = default;

 private:
  std::size_t n_features_ = 0;
  std::vector<std::size_t> kept_;
  std::vector<double> mins_, maxs_;
};

}  // namespace fzfeat
