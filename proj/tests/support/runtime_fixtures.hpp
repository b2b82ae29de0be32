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

#include <random>
#include <string>
#include <vector>

#include "fzfeat/portfolio.hpp"
#include "support/portfolio_oracle.hpp"

namespace fzfeat::testing {

// Cells: a number below the timeout is a solving time, the timeout itself
// an unsolved run and -1 a premature failure.
RuntimeMatrix runtime_matrix(std::vector<std::string> solvers, const std::vector<std::vector<double>>& cells,
                             const std::vector<double>& feat_time = {});

// Random matrix over shuffled solver names with coarse times, so that ties
// on solved count and total time are common.
RuntimeMatrix random_runtime_matrix(std::mt19937& rng, std::size_t instances, std::size_t solvers);

OracleMatrix oracle_view(const RuntimeMatrix& rt);

}  // namespace fzfeat::testing
