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

#include "fzfeat/graph.hpp"

#include <algorithm>

#include "fzfeat/stats.hpp"

namespace fzfeat {

UndirectedGraph::UndirectedGraph(std::vector<std::vector<std::uint32_t>> adjacency) : adj_(std::move(adjacency)) {
  for (std::uint32_t v = 0; v < adj_.size(); ++v) {
    auto& n = adj_[v];
    std::sort(n.begin(), n.end());
    n.erase(std::unique(n.begin(), n.end()), n.end());
    n.erase(std::remove(n.begin(), n.end(), v), n.end());
  }
}

UndirectedGraph UndirectedGraph::from_edges(std::size_t n,
                                            const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (auto [a, b] : edges) {
    if (a == b) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return UndirectedGraph(std::move(adj));
}

std::size_t UndirectedGraph::num_edges() const {
  std::size_t total = 0;
  for (const auto& n : adj_) total += n.size();
  return total / 2;
}

bool UndirectedGraph::has_edge(std::uint32_t a, std::uint32_t b) const {
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

namespace {

// Neighbors of node `self` in a bipartite incidence structure: the union of
// `right[l]` for l in `left[self]`, excluding `self`. `mark` must be sized to
// the node count and all-false on entry; it is restored on exit.
std::vector<std::uint32_t> two_hop(std::uint32_t self, const std::vector<std::uint32_t>& via,
                                   const std::vector<std::vector<std::uint32_t>>& right, std::vector<char>& mark) {
  std::vector<std::uint32_t> out;
  mark[self] = 1;
  for (auto l : via)
    for (auto n : right[l])
      if (!mark[n]) {
        mark[n] = 1;
        out.push_back(n);
      }
  mark[self] = 0;
  for (auto n : out) mark[n] = 0;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<UndirectedGraph> build_constraint_graph(const ModelIndex& index, const Deadline& deadline) {
  if (deadline.expired()) return std::nullopt;
  const auto& cons = index.constraints();
  // Inverted index: variable -> constraints containing it.
  std::vector<std::vector<std::uint32_t>> by_var(index.num_vars());
  for (std::uint32_t c = 0; c < cons.size(); ++c)
    for (auto v : cons[c].vars) by_var[v].push_back(c);
  std::vector<std::vector<std::uint32_t>> adj(cons.size());
  std::vector<char> mark(cons.size(), 0);
  for (std::uint32_t c = 0; c < cons.size(); ++c) {
    if (deadline.expired()) return std::nullopt;
    adj[c] = two_hop(c, cons[c].vars, by_var, mark);
  }
  return UndirectedGraph(std::move(adj));
}

std::optional<UndirectedGraph> build_variable_graph(const ModelIndex& index, const Deadline& deadline) {
  if (deadline.expired()) return std::nullopt;
  const auto& cons = index.constraints();
  std::vector<std::vector<std::uint32_t>> cons_of(index.num_vars());
  for (std::uint32_t c = 0; c < cons.size(); ++c)
    for (auto v : cons[c].vars) cons_of[v].push_back(c);
  std::vector<std::vector<std::uint32_t>> vars_of(cons.size());
  for (std::uint32_t c = 0; c < cons.size(); ++c) vars_of[c] = cons[c].vars;
  std::vector<std::vector<std::uint32_t>> adj(index.num_vars());
  std::vector<char> mark(index.num_vars(), 0);
  for (std::uint32_t v = 0; v < index.num_vars(); ++v) {
    if (deadline.expired()) return std::nullopt;
    adj[v] = two_hop(v, cons_of[v], vars_of, mark);
  }
  return UndirectedGraph(std::move(adj));
}

std::optional<std::vector<double>> clustering_coefficients(const UndirectedGraph& g, const Deadline& deadline) {
  const std::size_t n = g.num_nodes();
  std::vector<double> out(n, 0.0);
  std::vector<char> mark(n, 0);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (deadline.expired()) return std::nullopt;
    const auto& nv = g.neighbors(v);
    const std::size_t d = nv.size();
    if (d < 2) continue;
    for (auto u : nv) mark[u] = 1;
    std::size_t twice_edges = 0;
    for (auto u : nv)
      for (auto w : g.neighbors(u))
        if (mark[w]) ++twice_edges;
    for (auto u : nv) mark[u] = 0;
    // twice_edges counts each edge among neighbors twice.
    out[v] = static_cast<double>(twice_edges) / (static_cast<double>(d) * static_cast<double>(d - 1));
  }
  return out;
}

std::optional<std::vector<double>> node_diameters(const UndirectedGraph& g, const Deadline& deadline) {
  const std::size_t n = g.num_nodes();
  std::vector<double> out(n, 0.0);
  std::vector<std::int64_t> dist(n, -1);
  std::vector<std::uint32_t> queue;
  queue.reserve(n);
  for (std::uint32_t s = 0; s < n; ++s) {
    if (deadline.expired()) return std::nullopt;
    queue.clear();
    queue.push_back(s);
    dist[s] = 0;
    std::int64_t ecc = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto v = queue[head];
      // Large components: check the clock inside the BFS too.
      if ((head & 0xFFFF) == 0xFFFF && deadline.expired()) return std::nullopt;
      for (auto w : g.neighbors(v))
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          ecc = std::max(ecc, dist[w]);
          queue.push_back(w);
        }
    }
    for (auto v : queue) dist[v] = -1;
    out[s] = static_cast<double>(ecc);
  }
  return out;
}

namespace {

void put(std::array<double, 20>& values, std::size_t block, const StatSummary& s) {
  values[block * 5 + 0] = s.min;
  values[block * 5 + 1] = s.max;
  values[block * 5 + 2] = s.avg;
  values[block * 5 + 3] = s.cv;
  values[block * 5 + 4] = s.entropy;
}

std::vector<double> degrees(const UndirectedGraph& g) {
  std::vector<double> d(g.num_nodes());
  for (std::uint32_t v = 0; v < g.num_nodes(); ++v) d[v] = static_cast<double>(g.degree(v));
  return d;
}

}  // namespace

GraphFeatures graph_features(const ModelIndex& index, std::chrono::steady_clock::duration budget) {
  GraphFeatures out;
  out.values.fill(kSentinel);
  auto timeout = [] {
    GraphFeatures t;
    t.values.fill(kSentinel);
    t.timed_out = true;
    return t;
  };
  const Deadline deadline = Deadline::after(budget);
  if (deadline.expired()) return timeout();

  auto cg = build_constraint_graph(index, deadline);
  if (!cg) return timeout();
  auto clust = clustering_coefficients(*cg, deadline);
  if (!clust) return timeout();
  auto vg = build_variable_graph(index, deadline);
  if (!vg) return timeout();
  auto diam = node_diameters(*vg, deadline);
  if (!diam) return timeout();

  std::vector<double> cg_deg = degrees(*cg);
  out.vg_degree = degrees(*vg);
  out.vg_diameter = std::move(*diam);
  put(out.values, 0, stat_summary(cg_deg));
  put(out.values, 1, stat_summary(*clust));
  put(out.values, 2, stat_summary(out.vg_degree));
  put(out.values, 3, stat_summary(out.vg_diameter));
  return out;
}

}  // namespace fzfeat
