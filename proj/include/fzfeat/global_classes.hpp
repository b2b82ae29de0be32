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
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

namespace fzfeat {

inline constexpr std::size_t kNumGlobalClasses = 27;

// Class names in feature order (gc_<name>).
const std::array<std::string_view, kNumGlobalClasses>& global_class_names();

// Maps FlatZinc constraint names to global-constraint classes.
class GlobalClassTable {
 public:
  // The shipped table (config/global_classes.txt).
  static const GlobalClassTable& builtin();

  // Parses "<constraint> <class>" lines; '#' starts a comment. Throws Error
  // on an unknown class name or a malformed line.
  static GlobalClassTable parse(std::string_view text);
  static GlobalClassTable load(const std::string& path);

  std::optional<std::size_t> class_of(std::string_view constraint) const;
  std::size_t size() const { return classes_.size(); }

 private:
  std::unordered_map<std::string, std::size_t> classes_;
};

}  // namespace fzfeat
