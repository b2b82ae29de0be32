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

#include "fzfeat/probe.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "fzfeat/stats.hpp"

namespace fzfeat {

namespace {

struct Key {
  const char* pattern;
  double SolverStats::*field;
};

// `%%  peak depth:  12` style lines printed by fz -s.
const Key kGecodeKeys[] = {
    {R"(^%+\s*solutions:\s*([0-9.eE+-]+))", &SolverStats::solutions},
    {R"(^%+\s*propagations:\s*([0-9.eE+-]+))", &SolverStats::propagations},
    {R"(^%+\s*nodes:\s*([0-9.eE+-]+))", &SolverStats::nodes},
    {R"(^%+\s*failures:\s*([0-9.eE+-]+))", &SolverStats::failures},
    {R"(^%+\s*peak depth:\s*([0-9.eE+-]+))", &SolverStats::peak_depth},
    {R"(^%+\s*peak memory:\s*([0-9.eE+-]+))", &SolverStats::peak_memory},
};

const Key kMznStatKeys[] = {
    {R"(^%%%mzn-stat:\s*(?:solutions|nSolutions)=([0-9.eE+-]+))", &SolverStats::solutions},
    {R"(^%%%mzn-stat:\s*propagations=([0-9.eE+-]+))", &SolverStats::propagations},
    {R"(^%%%mzn-stat:\s*nodes=([0-9.eE+-]+))", &SolverStats::nodes},
    {R"(^%%%mzn-stat:\s*failures=([0-9.eE+-]+))", &SolverStats::failures},
    {R"(^%%%mzn-stat:\s*peakDepth=([0-9.eE+-]+))", &SolverStats::peak_depth},
    {R"(^%%%mzn-stat:\s*(?:peakMem|peakMemory)=([0-9.eE+-]+))", &SolverStats::peak_memory},
};

template <std::size_t N>
void scan(std::string_view output, const Key (&keys)[N], SolverStats& out) {
  std::vector<std::regex> res;
  res.reserve(N);
  for (const auto& k : keys) res.emplace_back(k.pattern);
  std::istringstream in{std::string(output)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    for (std::size_t i = 0; i < N; ++i) {
      std::smatch m;
      if (std::regex_search(line, m, res[i])) {
        try {
          out.*(keys[i].field) = std::stod(m[1].str());
        } catch (const std::exception&) {
        }
      }
    }
  }
}

std::string replace_all(std::string s, std::string_view from, const std::string& to) {
  for (std::size_t at = s.find(from); at != std::string::npos; at = s.find(from, at + to.size()))
    s.replace(at, from.size(), to);
  return s;
}

}  // namespace

const std::vector<std::string>& solver_dialects() {
  static const std::vector<std::string> names{"gecode", "mzn-stat"};
  return names;
}

SolverStats parse_solver_stats(std::string_view output, std::string_view dialect) {
  SolverStats s;
  if (dialect == "gecode") {
    scan(output, kGecodeKeys, s);
    scan(output, kMznStatKeys, s);
  } else if (dialect == "mzn-stat") {
    scan(output, kMznStatKeys, s);
  } else {
    throw Error(fmt::format("unknown statistics dialect '{}'", dialect));
  }
  return s;
}

std::vector<std::string> SolverAdapter::command(const std::string& fzn, std::chrono::milliseconds run_cap) const {
  std::vector<std::string> cmd{executable};
  const std::string ms = std::to_string(run_cap.count());
  const std::string secs = fmt::format("{:g}", static_cast<double>(run_cap.count()) / 1000.0);
  for (auto a : args) {
    a = replace_all(std::move(a), "{fzn}", fzn);
    a = replace_all(std::move(a), "{time_ms}", ms);
    a = replace_all(std::move(a), "{time_s}", secs);
    cmd.push_back(std::move(a));
  }
  return cmd;
}

SolverAdapter SolverAdapter::from_json(std::string_view text) {
  SolverAdapter a;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    a.executable = j.value("executable", std::string{});
    a.args = j.value("args", std::vector<std::string>{"-s", "-time", "{time_ms}", "{fzn}"});
    a.dialect = j.value("dialect", std::string("gecode"));
    a.cap = std::chrono::milliseconds(j.value("cap_ms", 2000));
    a.kill_after = std::chrono::milliseconds(j.value("kill_after_ms", 5000));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("solver adapter: ") + e.what());
  }
  if (const char* env = std::getenv("FZFEAT_SOLVER"); env && *env) a.executable = env;
  if (a.executable.empty()) throw Error("solver adapter: no executable configured");
  if (std::find(solver_dialects().begin(), solver_dialects().end(), a.dialect) == solver_dialects().end())
    throw Error(fmt::format("solver adapter: unknown dialect '{}'", a.dialect));
  if (a.cap.count() <= 0 || a.kill_after <= a.cap)
    throw Error("solver adapter: need 0 < cap_ms < kill_after_ms");
  return a;
}

SolverAdapter SolverAdapter::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open solver adapter '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

ProbeRun run_probe(const std::string& fzn, const SolverAdapter& adapter, std::chrono::milliseconds cap,
                   std::chrono::milliseconds kill_after) {
  ProbeRun run;
  ProcessResult p = run_process(adapter.command(fzn, cap), kill_after);
  run.wall_seconds = std::chrono::duration<double>(p.wall).count();
  run.killed = p.killed;
  run.ok = p.ok();
  run.transcript = std::move(p.output);
  if (p.killed)
    run.error = fmt::format("killed after {} ms", kill_after.count());
  else if (p.signal)
    run.error = fmt::format("terminated by signal {}", p.signal);
  else if (p.exit_code != 0)
    run.error = fmt::format("exit status {}", p.exit_code);
  if (run.ok) run.stats = parse_solver_stats(run.transcript, adapter.dialect);
  return run;
}

std::array<double, 11> dynamic_features(const ProbeRun* run, std::size_t n_constraints, const Timings& timings) {
  std::array<double, 11> f;
  f.fill(kSentinel);
  auto ratio_of = [](double a, double b) { return a < 0 || b < 0 ? kSentinel : ratio(a, b); };
  double probe_wall = 0;
  if (run) {
    probe_wall = run->wall_seconds;
    if (run->ok) {
      const SolverStats& s = run->stats;
      f[0] = s.solutions;
      f[1] = s.propagations;
      f[2] = ratio_of(s.propagations, static_cast<double>(n_constraints));
      f[3] = s.nodes;
      f[4] = s.failures;
      f[5] = ratio_of(s.failures, s.nodes);
      f[6] = s.peak_depth;
      f[7] = s.peak_memory;
    }
  }
  f[8] = timings.t_compile;
  f[9] = timings.t_static;
  f[10] = timings.t_compile + timings.t_static + probe_wall;
  return f;
}

}  // namespace fzfeat
