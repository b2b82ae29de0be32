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

#include <span>
#include <vector>

namespace fzfeat {

// Value emitted for features that are undefined (empty sets, zero
// denominators, timeouts, satisfaction goals).
inline constexpr double kSentinel = -1.0;

// min, max, mean, coefficient of variation (population standard deviation
// over the mean) and Shannon entropy (natural log) of the empirical
// distribution of distinct values.
struct StatSummary {
  double min = kSentinel;
  double max = kSentinel;
  double avg = kSentinel;
  double cv = kSentinel;
  double entropy = kSentinel;

  bool operator==(const StatSummary&) const = default;
};

// Empty input yields all five fields at kSentinel; cv is kSentinel when the
// mean is 0. The result does not depend on the order of `xs`.
StatSummary stat_summary(std::span<const double> xs);

// Sum after sorting, so that permutations of the input give identical bits.
double ordered_sum(std::vector<double> xs);

// ln(x) for x > 0 and 0 otherwise.
double safe_log(double x);

// num/den, or kSentinel when den is 0 or either side is non-finite.
double ratio(double num, double den);

}  // namespace fzfeat
