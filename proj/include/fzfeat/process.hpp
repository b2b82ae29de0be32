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

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "fzfeat/model.hpp"

namespace fzfeat {

class ExecutableNotFound : public Error {
 public:
  explicit ExecutableNotFound(const std::string& name) : Error("executable not found: " + name), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class SpawnError : public Error {
 public:
  using Error::Error;
};

struct ProcessResult {
  int exit_code = -1;  // -1 unless the process exited normally
  int signal = 0;      // terminating signal, 0 if none
  bool killed = false; // force-killed by the supervisor
  std::string output;  // stdout and stderr, interleaved
  std::chrono::steady_clock::duration wall{};
  bool ok() const { return !killed && signal == 0 && exit_code == 0; }
};

// Absolute path of `name`: checked directly if it contains a slash,
// otherwise searched on PATH.
std::optional<std::string> find_executable(const std::string& name);

// Runs argv[0] with the remaining arguments in its own process group. Once
// `kill_after` elapses the whole group receives SIGKILL; output is then
// drained for at most `grace` before the call returns.
// Throws ExecutableNotFound or SpawnError.
ProcessResult run_process(const std::vector<std::string>& argv, std::chrono::steady_clock::duration kill_after,
                          std::chrono::steady_clock::duration grace = std::chrono::seconds(1));

}  // namespace fzfeat
