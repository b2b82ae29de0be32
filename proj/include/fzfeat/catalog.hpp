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
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fzfeat {

enum class FeatureCategory {
  Variables,
  Domains,
  Constraints,
  GlobalConstraints,
  Graphs,
  Solving,
  Objective,
  Dynamic,
};

inline constexpr std::size_t kNumCategories = 8;
inline constexpr std::array<std::size_t, kNumCategories> kCategorySizes{27, 18, 27, 29, 20, 11, 12, 11};
inline constexpr std::size_t kNumStaticFeatures = 144;
inline constexpr std::size_t kNumDynamicFeatures = 11;
inline constexpr std::size_t kNumFeatures = 155;

std::string_view to_string(FeatureCategory c);

// First catalog position of a category.
std::size_t category_offset(FeatureCategory c);

struct FeatureInfo {
  std::string name;
  FeatureCategory category;
  std::string formula;
};

// The 155 features in vector order.
const std::vector<FeatureInfo>& feature_catalog();

// Text table: index, name, category, formula. Units of the solver-printed
// counters are noted in the formula column.
std::string catalog_table();

struct FeatureVector {
  std::array<double, kNumFeatures> values{};

  std::span<const double> category(FeatureCategory c) const {
    return std::span<const double>(values).subspan(category_offset(c), kCategorySizes[static_cast<std::size_t>(c)]);
  }
  std::span<double> category(FeatureCategory c) {
    return std::span<double>(values).subspan(category_offset(c), kCategorySizes[static_cast<std::size_t>(c)]);
  }
  double operator[](std::size_t i) const { return values[i]; }
  double& operator[](std::size_t i) { return values[i]; }
  bool all_finite() const;

  bool operator==(const FeatureVector&) const = default;
};

}  // namespace fzfeat
