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
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fzfeat/model.hpp"

namespace fzfeat {

class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  static Deadline after(Clock::duration budget) { return Deadline(Clock::now() + budget, budget <= Clock::duration::zero()); }
  static Deadline never() { return Deadline(Clock::time_point::max(), false); }

  bool expired() const { return zero_ || Clock::now() >= end_; }

 private:
  Deadline(Clock::time_point end, bool zero) : end_(end), zero_(zero) {}
  Clock::time_point end_;
  bool zero_;
};

// Simple undirected graph without self-loops or parallel edges. Neighbor
// lists are sorted.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(std::vector<std::vector<std::uint32_t>> adjacency);
  // Builds from an edge list; self-loops and duplicates are dropped.
  static UndirectedGraph from_edges(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

  std::size_t num_nodes() const { return adj_.size(); }
  std::size_t num_edges() const;
  const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const { return adj_[v]; }
  std::size_t degree(std::uint32_t v) const { return adj_[v].size(); }
  bool has_edge(std::uint32_t a, std::uint32_t b) const;

 private:
  std::vector<std::vector<std::uint32_t>> adj_;
};

// One node per constraint in C (ModelIndex order); edge iff the constraints
// share a variable. nullopt if the deadline expires.
std::optional<UndirectedGraph> build_constraint_graph(const ModelIndex& index,
                                                      const Deadline& deadline = Deadline::never());

// One node per variable in V; edge iff both occur in some constraint.
std::optional<UndirectedGraph> build_variable_graph(const ModelIndex& index,
                                                    const Deadline& deadline = Deadline::never());

// 2·E(N(v)) / (d(v)(d(v)-1)); 0 when d(v) < 2.
std::optional<std::vector<double>> clustering_coefficients(const UndirectedGraph& g,
                                                           const Deadline& deadline = Deadline::never());

// Eccentricity of every node within its component (unreachable pairs count
// as distance 0, so isolated nodes get 0).
std::optional<std::vector<double>> node_diameters(const UndirectedGraph& g,
                                                  const Deadline& deadline = Deadline::never());

inline constexpr auto kDefaultGraphBudget = std::chrono::seconds(2);

struct GraphFeatures {
  // StatSummary of CG degrees, CG clustering, VG degrees, VG diameters.
  std::array<double, 20> values{};
  bool timed_out = false;
  // Per-V-slot degree and diameter in the variable graph; empty on timeout.
  std::vector<double> vg_degree;
  std::vector<double> vg_diameter;
};

// All-or-nothing: if `budget` elapses, every value is -1 and the per-node
// vectors are empty.
GraphFeatures graph_features(const ModelIndex& index,
                             std::chrono::steady_clock::duration budget = kDefaultGraphBudget);

}  // namespace fzfeat
