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

#include "fzfeat/global_classes.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "fzfeat/model.hpp"
#include "global_classes_data.hpp"

namespace fzfeat {

const std::array<std::string_view, kNumGlobalClasses>& global_class_names() {
  static const std::array<std::string_view, kNumGlobalClasses> names{
      "all_diff",   "all_equal", "among",       "array_int",   "array_set", "at_least_most", "bin_packing",
      "bool_lin",   "circuit",   "count",       "cumulative",  "decr_inc",  "diffn",         "disjoint",
      "global_card", "link_set", "inverse",     "max_min_int", "member",    "nvalue",        "precede",
      "range",      "regular",   "schedule",    "set_weights", "sort",      "table"};
  return names;
}

GlobalClassTable GlobalClassTable::parse(std::string_view text) {
  GlobalClassTable t;
  const auto& names = global_class_names();
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string cons, cls, extra;
    if (!(fields >> cons)) continue;
    if (!(fields >> cls) || (fields >> extra))
      throw Error("global class table line " + std::to_string(lineno) + ": expected '<constraint> <class>'");
    auto it = std::find(names.begin(), names.end(), cls);
    if (it == names.end())
      throw Error("global class table line " + std::to_string(lineno) + ": unknown class '" + cls + "'");
    t.classes_[cons] = static_cast<std::size_t>(it - names.begin());
  }
  return t;
}

GlobalClassTable GlobalClassTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open global class table '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const GlobalClassTable& GlobalClassTable::builtin() {
  static const GlobalClassTable table = parse(kBuiltinGlobalClasses);
  return table;
}

std::optional<std::size_t> GlobalClassTable::class_of(std::string_view constraint) const {
  auto it = classes_.find(std::string(constraint));
  if (it == classes_.end()) return std::nullopt;
  return it->second;
}

}  // namespace fzfeat
