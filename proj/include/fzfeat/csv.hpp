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
#include <string_view>
#include <vector>

namespace fzfeat {

// RFC 4180 records: quoted fields may contain commas, quotes ("") and
// newlines. Blank lines are skipped.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

// Field text, quoted when needed.
std::string csv_field(std::string_view s);
std::string csv_line(const std::vector<std::string>& fields);

// Shortest text that reads back to the same double.
std::string format_number(double v);

// Throws Error naming `where` when `s` is not a finite number.
double parse_number(std::string_view s, std::string_view where);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace fzfeat
