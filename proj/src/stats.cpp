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

#include "fzfeat/stats.hpp"

#include <algorithm>
#include <cmath>

namespace fzfeat {

double ordered_sum(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  double s = 0;
  for (double x : xs) s += x;
  return s;
}

double safe_log(double x) { return x > 0 ? std::log(x) : 0.0; }

double ratio(double num, double den) {
  if (den == 0 || !std::isfinite(num) || !std::isfinite(den)) return kSentinel;
  return num / den;
}

StatSummary stat_summary(std::span<const double> xs) {
  StatSummary s;
  if (xs.empty()) return s;
  std::vector<double> v(xs.begin(), xs.end());
  std::sort(v.begin(), v.end());
  const double n = static_cast<double>(v.size());

  double sum = 0;
  for (double x : v) sum += x;
  s.min = v.front();
  s.max = v.back();
  s.avg = std::clamp(sum / n, s.min, s.max);

  double sq = 0;
  for (double x : v) sq += (x - s.avg) * (x - s.avg);
  double sd = std::sqrt(sq / n);
  s.cv = s.avg != 0 ? sd / s.avg : kSentinel;

  // Runs of equal values in the sorted vector are the distinct values.
  std::vector<double> terms;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    double p = static_cast<double>(j - i) / n;
    terms.push_back(-p * std::log(p));
    i = j;
  }
  s.entropy = terms.size() == 1 ? 0.0 : ordered_sum(std::move(terms));
  return s;
}

}  // namespace fzfeat
