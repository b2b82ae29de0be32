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

#include <string>
#include <vector>

namespace fzfeat::testing {

// Brute-force reference for the 144 static features. It reads the simple
// FlatZinc subset used by the fixtures with its own string-splitting reader
// and recomputes every formula directly: pairwise set intersections for the
// constraint graph, all pairs for the variable graph, O(n^3) triangle
// counting for clustering and Floyd-Warshall for eccentricities. Summations
// run in input order, so comparisons use a relative tolerance.
std::vector<double> oracle_static_features(const std::string& fzn_text);

// Per-node oracles, exposed for graph tests.
std::vector<double> oracle_clustering(const std::vector<std::vector<int>>& adjacency_matrix);
std::vector<double> oracle_eccentricity(const std::vector<std::vector<int>>& adjacency_matrix);

}  // namespace fzfeat::testing
