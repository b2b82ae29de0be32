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

#include "fzfeat/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "fzfeat/catalog.hpp"
#include "fzfeat/csv.hpp"
#include "fzfeat/model.hpp"

namespace fzfeat {

FeatureTable FeatureTable::parse_csv(std::string_view text) {
  auto rows = fzfeat::parse_csv(text);
  if (rows.empty()) throw Error("features CSV: empty");
  const auto& header = rows[0];
  const auto& cat = feature_catalog();
  if (header.size() != kNumFeatures + 1 || header[0] != "instance")
    throw Error(fmt::format("features CSV: expected 'instance' and {} feature columns, got {} columns", kNumFeatures,
                            header.size()));
  for (std::size_t j = 0; j < kNumFeatures; ++j)
    if (header[j + 1] != cat[j].name)
      throw Error(fmt::format("features CSV: column {} is '{}', expected '{}'", j + 2, header[j + 1], cat[j].name));
  FeatureTable t;
  std::set<std::string> seen;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != header.size())
      throw Error(fmt::format("features CSV line {}: expected {} fields, got {}", r + 1, header.size(), rows[r].size()));
    if (!seen.insert(rows[r][0]).second) throw Error(fmt::format("features CSV: duplicate instance '{}'", rows[r][0]));
    t.instances.push_back(rows[r][0]);
    std::vector<double> row;
    for (std::size_t j = 1; j < rows[r].size(); ++j)
      row.push_back(parse_number(rows[r][j], fmt::format("features CSV line {}", r + 1)));
    t.rows.push_back(std::move(row));
  }
  return t;
}

FeatureTable FeatureTable::load_csv(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_csv(text);
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

std::string FeatureTable::to_csv() const {
  std::vector<std::string> header{"instance"};
  for (const auto& f : feature_catalog()) header.push_back(f.name);
  std::string out = csv_line(header) + "\n";
  for (std::size_t i = 0; i < instances.size(); ++i) {
    std::vector<std::string> row{instances[i]};
    for (double v : rows[i]) row.push_back(format_number(v));
    out += csv_line(row) + "\n";
  }
  return out;
}

std::string FeatureTable::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  const auto& cat = feature_catalog();
  for (std::size_t i = 0; i < instances.size(); ++i) {
    nlohmann::ordered_json feats = nlohmann::ordered_json::object();
    for (std::size_t j = 0; j < rows[i].size() && j < cat.size(); ++j) feats[cat[j].name] = rows[i][j];
    arr.push_back({{"instance", instances[i]}, {"features", feats}});
  }
  return arr.dump(2) + "\n";
}

std::vector<std::vector<double>> align_features(const FeatureTable& features, RuntimeMatrix& runtimes) {
  std::map<std::string, std::size_t> by_id;
  for (std::size_t i = 0; i < features.instances.size(); ++i) by_id[features.instances[i]] = i;
  std::set<std::string> rt_ids(runtimes.instances.begin(), runtimes.instances.end());
  std::vector<std::string> only_features, only_runtimes;
  for (const auto& id : features.instances)
    if (!rt_ids.count(id)) only_features.push_back(id);
  for (const auto& id : runtimes.instances)
    if (!by_id.count(id)) only_runtimes.push_back(id);
  if (!only_features.empty() || !only_runtimes.empty()) {
    auto list = [](const std::vector<std::string>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size() && i < 10; ++i) s += (i ? ", " : "") + v[i];
      if (v.size() > 10) s += fmt::format(", ... ({} total)", v.size());
      return s.empty() ? std::string("none") : s;
    };
    throw Error(fmt::format("instance ids differ: only in features: {}; only in runtimes: {}", list(only_features),
                            list(only_runtimes)));
  }
  std::vector<std::vector<double>> out;
  for (std::size_t i = 0; i < runtimes.instances.size(); ++i) {
    const auto& row = features.rows[by_id.at(runtimes.instances[i])];
    if (runtimes.feat_time[i] == 0 && row.size() == kNumFeatures && row.back() > 0) runtimes.feat_time[i] = row.back();
    out.push_back(row);
  }
  return out;
}

SyntheticDataset make_synthetic_dataset(const SyntheticOptions& o) {
  if (o.instances < 1 || o.solvers < 1) throw Error("synthetic dataset needs instances and solvers");
  std::mt19937_64 rng(o.seed);
  auto uniform = [&](double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  const std::size_t m = o.solvers;
  SyntheticDataset d;

  // Cluster c gets weight m - c.
  std::vector<std::size_t> pattern;
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t w = 0; w < m - c; ++w) pattern.push_back(c);
  for (std::size_t i = 0; i < o.instances; ++i) d.cluster.push_back(pattern[i % pattern.size()]);

  // Column roles: 41 constant (including the total-time feature), 8 mild
  // noise, optionally 1 wide noise, the rest informative.
  enum Role { Constant, Noise, Wide, Informative };
  const std::size_t t_total = kNumFeatures - 1;
  std::vector<Role> role(kNumFeatures, Informative);
  role[t_total] = Constant;
  for (std::size_t j = 0, n_const = 1; n_const < 41; ++j)
    if (role[(j * 7 + 3) % kNumFeatures] == Informative) {
      role[(j * 7 + 3) % kNumFeatures] = Constant;
      ++n_const;
    }
  std::size_t placed = 0;
  for (std::size_t j = 0; j < kNumFeatures && placed < 8; ++j)
    if (role[(j * 11 + 5) % kNumFeatures] == Informative) {
      role[(j * 11 + 5) % kNumFeatures] = Noise;
      ++placed;
    }
  if (o.wide_noise)
    for (std::size_t j = 0; j < kNumFeatures; ++j)
      if (role[j] == Informative) {
        role[j] = Wide;
        break;
      }
  std::vector<double> constant(kNumFeatures);
  for (auto& c : constant) c = std::floor(uniform(-1, 20));
  constant[t_total] = o.feat_time;
  std::vector<std::vector<double>> centre(m, std::vector<double>(kNumFeatures));
  for (auto& row : centre)
    for (auto& v : row) v = uniform(0, 100);

  for (std::size_t i = 0; i < o.instances; ++i) {
    std::vector<double> row(kNumFeatures);
    for (std::size_t j = 0; j < kNumFeatures; ++j) {
      switch (role[j]) {
        case Constant: row[j] = constant[j]; break;
        case Noise: row[j] = uniform(0, 1); break;
        case Wide: row[j] = uniform(0, 1e6); break;
        case Informative: row[j] = centre[d.cluster[i]][j] + uniform(-1, 1); break;
      }
    }
    d.features.instances.push_back(fmt::format("synthetic_{:03}", i + 1));
    d.features.rows.push_back(std::move(row));
  }

  RuntimeMatrix& rt = d.runtimes;
  rt.instances = d.features.instances;
  for (std::size_t s = 0; s < m; ++s) rt.solvers.push_back(fmt::format("solver_{:02}", s + 1));
  for (std::size_t i = 0; i < o.instances; ++i) {
    std::vector<double> times(m);
    std::vector<bool> solved(m);
    for (std::size_t s = 0; s < m; ++s) {
      double roll = uniform(0, 1);
      if (s == d.cluster[i]) {
        times[s] = std::round(uniform(5, 60) * 100) / 100;
        solved[s] = true;
      } else if (roll < o.cross_solve) {
        times[s] = std::round(uniform(300, 1500) * 100) / 100;
        solved[s] = true;
      } else {
        times[s] = o.failures ? 0 : rt.timeout;
        solved[s] = false;
      }
    }
    rt.time.push_back(std::move(times));
    rt.solved.push_back(std::move(solved));
    rt.feat_time.push_back(o.feat_time);
  }
  rt.validate();
  return d;
}

}  // namespace fzfeat
