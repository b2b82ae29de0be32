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

#include "fzfeat/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <mutex>
#include <thread>
#include <unistd.h>

#include <fmt/format.h>

#include "fzfeat/csv.hpp"
#include "fzfeat/flatzinc.hpp"
#include "fzfeat/static_features.hpp"
#include "fzfeat/xcsp.hpp"

namespace fzfeat {

namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string lower_extension(const fs::path& p) {
  auto ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext;
}

bool is_input(const fs::path& p) {
  auto ext = lower_extension(p);
  return ext == ".fzn" || ext == ".mzn" || ext == ".xml";
}

class ScratchDir {
 public:
  ScratchDir() {
    static std::atomic<unsigned> counter{0};
    path_ = fs::temp_directory_path() / fmt::format("fzfeat-{}-{}", ::getpid(), counter++);
    fs::create_directories(path_);
  }
  ~ScratchDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string replace_all(std::string s, std::string_view from, const std::string& to) {
  for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
    s.replace(pos, from.size(), to);
  return s;
}

// Compiles `mzn` into `fzn`; returns an error message or empty on success.
std::string compile(const std::string& mzn, const std::string& fzn, const CompilerConfig& c, std::string& log) {
  if (!find_executable(c.executable))
    return fmt::format("no MiniZinc compiler: '{}' not found (set FZFEAT_MZN2FZN or put mzn2fzn on PATH)",
                       c.executable);
  std::vector<std::string> argv{c.executable};
  for (const auto& a : c.args) argv.push_back(replace_all(replace_all(a, "{mzn}", mzn), "{fzn}", fzn));
  auto r = run_process(argv, c.cap);
  log += r.output;
  if (r.killed) return fmt::format("compilation exceeded {} s", std::chrono::duration<double>(c.cap).count());
  if (!r.ok()) return fmt::format("compiler exited with status {}", r.signal ? -r.signal : r.exit_code);
  if (!fs::exists(fzn)) return "compiler produced no FlatZinc output";
  return {};
}

}  // namespace

CompilerConfig CompilerConfig::from_env() {
  CompilerConfig c;
  if (const char* env = std::getenv("FZFEAT_MZN2FZN"); env && *env) c.executable = env;
  return c;
}

ExtractResult extract_instance(const std::string& path, const ExtractOptions& options) {
  ExtractResult res;
  res.instance = path;
  try {
    if (!fs::is_regular_file(path)) throw Error("no such file");
    const auto ext = lower_extension(path);
    std::optional<ScratchDir> scratch;
    std::string fzn = path;

    if (ext == ".mzn" || ext == ".xml") {
      scratch.emplace();
      auto start = Clock::now();
      std::string mzn = path;
      if (ext == ".xml") {
        mzn = (scratch->path() / "model.mzn").string();
        write_file(mzn, translate_to_minizinc(load_xcsp_file(path)));
      }
      fzn = (scratch->path() / "model.fzn").string();
      std::string err = compile(mzn, fzn, options.compiler, res.transcript);
      res.timings.t_compile = seconds_since(start);
      if (!err.empty()) throw Error(err);
    }

    auto start = Clock::now();
    Model model = load_flatzinc_file(fzn);
    StaticOptions so;
    so.graph_budget = options.graph_budget;
    so.global_classes = options.global_classes;
    res.features = static_features(model, so);
    std::size_t n_constraints = ModelIndex(model).num_constraints();
    res.timings.t_static = seconds_since(start);

    std::optional<ProbeRun> run;
    if (options.adapter) {
      try {
        run = run_probe(fzn, *options.adapter, options.adapter->cap, options.adapter->kill_after);
        res.t_dynamic = run->wall_seconds;
        res.transcript += run->transcript;
        res.probe_failed = !run->ok;
      } catch (const Error& e) {
        res.probe_failed = true;
        res.transcript += std::string(e.what()) + "\n";
      }
    }
    auto dyn = dynamic_features(run ? &*run : nullptr, n_constraints, res.timings);
    std::copy(dyn.begin(), dyn.end(), res.features.category(FeatureCategory::Dynamic).begin());
    res.ok = true;
  } catch (const std::exception& e) {
    res.ok = false;
    res.error = e.what();
  }
  return res;
}

std::vector<std::string> collect_inputs(const std::vector<std::string>& paths) {
  std::vector<std::string> out;
  for (const auto& p : paths) {
    if (fs::is_directory(p)) {
      for (const auto& entry : fs::recursive_directory_iterator(p))
        if (entry.is_regular_file() && is_input(entry.path())) out.push_back(entry.path().string());
    } else if (fs::exists(p)) {
      out.push_back(p);
    } else {
      throw Error(p + ": no such file or directory");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ExtractResult> extract_batch(const std::vector<std::string>& inputs, const ExtractOptions& options,
                                         unsigned workers, const std::function<void(const ExtractResult&)>& on_done) {
  std::vector<ExtractResult> results(inputs.size());
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  auto work = [&] {
    for (std::size_t i; (i = next++) < inputs.size();) {
      results[i] = extract_instance(inputs[i], options);
      if (on_done) {
        std::lock_guard lock(mu);
        on_done(results[i]);
      }
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(inputs.size(), 1))));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace fzfeat
