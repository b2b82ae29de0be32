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

#include "fzfeat/scaler.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "fzfeat/model.hpp"

namespace fzfeat {

namespace {

constexpr const char* kMagic = "fzfeat-scaler 1";

}  // namespace

Scaler Scaler::fit(const std::vector<std::vector<double>>& train) {
  if (train.empty()) throw Error("cannot fit a scaler on an empty training set");
  Scaler s;
  s.n_features_ = train.front().size();
  for (const auto& row : train)
    if (row.size() != s.n_features_)
      throw Error(fmt::format("training rows have {} and {} features", s.n_features_, row.size()));
  for (std::size_t j = 0; j < s.n_features_; ++j) {
    double lo = train.front()[j], hi = lo;
    for (const auto& row : train) {
      lo = std::min(lo, row[j]);
      hi = std::max(hi, row[j]);
    }
    if (lo < hi) {
      s.kept_.push_back(j);
      s.mins_.push_back(lo);
      s.maxs_.push_back(hi);
    }
  }
  return s;
}

std::vector<double> Scaler::apply(const std::vector<double>& row) const {
  if (row.size() != n_features_)
    throw Error(fmt::format("scaler fitted on {} features, got a row of {}", n_features_, row.size()));
  std::vector<double> out(kept_.size());
  for (std::size_t k = 0; k < kept_.size(); ++k) {
    double x = row[kept_[k]];
    if (x <= mins_[k])
      out[k] = -1;
    else if (x >= maxs_[k])
      out[k] = 1;
    else
      out[k] = std::clamp(-1.0 + 2.0 * (x - mins_[k]) / (maxs_[k] - mins_[k]), -1.0, 1.0);
  }
  return out;
}

std::vector<std::vector<double>> Scaler::apply_rows(const std::vector<std::vector<double>>& rows) const {
  std::vector<std::vector<double>> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(apply(r));
  return out;
}

std::string Scaler::serialize() const {
  std::string out = fmt::format("{}\n{} {}\n", kMagic, n_features_, kept_.size());
  for (std::size_t k = 0; k < kept_.size(); ++k)
    out += fmt::format("{} {:.17g} {:.17g}\n", kept_[k], mins_[k], maxs_[k]);
  return out;
}

Scaler Scaler::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string magic;
  if (!std::getline(in, magic) || magic != kMagic) throw Error("not a scaler file");
  Scaler s;
  std::size_t kept = 0;
  if (!(in >> s.n_features_ >> kept)) throw Error("scaler file: bad size line");
  for (std::size_t k = 0; k < kept; ++k) {
    std::size_t idx;
    double lo, hi;
    if (!(in >> idx >> lo >> hi)) throw Error(fmt::format("scaler file: bad entry {}", k + 1));
    if (idx >= s.n_features_ || !(lo < hi) || (!s.kept_.empty() && idx <= s.kept_.back()))
      throw Error(fmt::format("scaler file: invalid entry {}", k + 1));
    s.kept_.push_back(idx);
    s.mins_.push_back(lo);
    s.maxs_.push_back(hi);
  }
  std::string rest;
  if (in >> rest) throw Error("scaler file: trailing data");
  return s;
}

void Scaler::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << serialize();
}

Scaler Scaler::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace fzfeat
