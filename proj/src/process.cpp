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

#include "fzfeat/process.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/stat.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <sstream>

namespace fzfeat {

namespace {

using Clock = std::chrono::steady_clock;

bool is_executable(const std::string& path) {
  struct stat st {};
  return ::stat(path.c_str(), &st) == 0 && S_ISREG(st.st_mode) && ::access(path.c_str(), X_OK) == 0;
}

class Fd {
 public:
  Fd() = default;
  explicit Fd(int fd) : fd_(fd) {}
  Fd(const Fd&) = delete;
  Fd& operator=(const Fd&) = delete;
  ~Fd() { reset(); }
  int get() const { return fd_; }
  void reset(int fd = -1) {
    if (fd_ >= 0) ::close(fd_);
    fd_ = fd;
  }

 private:
  int fd_ = -1;
};

void make_pipe(Fd& read_end, Fd& write_end) {
  int fds[2];
  if (::pipe2(fds, O_CLOEXEC) != 0) throw SpawnError(std::string("pipe: ") + std::strerror(errno));
  read_end.reset(fds[0]);
  write_end.reset(fds[1]);
}

int poll_ms(Clock::duration d) {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
  if (ms < 0) return 0;
  return static_cast<int>(std::min<long long>(ms, 50));
}

}  // namespace

std::optional<std::string> find_executable(const std::string& name) {
  if (name.empty()) return std::nullopt;
  if (name.find('/') != std::string::npos) return is_executable(name) ? std::optional(name) : std::nullopt;
  const char* path = std::getenv("PATH");
  std::istringstream dirs(path ? path : "/usr/local/bin:/usr/bin:/bin");
  std::string dir;
  while (std::getline(dirs, dir, ':')) {
    std::string candidate = (dir.empty() ? "." : dir) + "/" + name;
    if (is_executable(candidate)) return candidate;
  }
  return std::nullopt;
}

ProcessResult run_process(const std::vector<std::string>& argv, Clock::duration kill_after, Clock::duration grace) {
  if (argv.empty()) throw SpawnError("empty command line");
  auto exe = find_executable(argv[0]);
  if (!exe) throw ExecutableNotFound(argv[0]);

  Fd out_r, out_w, err_r, err_w;
  make_pipe(out_r, out_w);
  make_pipe(err_r, err_w);  // reports exec failure; closed by a successful exec

  std::vector<char*> cargv;
  for (const auto& a : argv) cargv.push_back(const_cast<char*>(a.c_str()));
  cargv.push_back(nullptr);

  const auto start = Clock::now();
  pid_t pid = ::fork();
  if (pid < 0) throw SpawnError(std::string("fork: ") + std::strerror(errno));
  if (pid == 0) {
    ::setpgid(0, 0);
    ::dup2(out_w.get(), STDOUT_FILENO);
    ::dup2(out_w.get(), STDERR_FILENO);
    int devnull = ::open("/dev/null", O_RDONLY);
    if (devnull >= 0) ::dup2(devnull, STDIN_FILENO);
    ::execv(exe->c_str(), cargv.data());
    int e = errno;
    [[maybe_unused]] auto n = ::write(err_w.get(), &e, sizeof e);
    ::_exit(127);
  }
  ::setpgid(pid, pid);
  out_w.reset();
  err_w.reset();

  int exec_errno = 0;
  if (::read(err_r.get(), &exec_errno, sizeof exec_errno) == static_cast<ssize_t>(sizeof exec_errno)) {
    ::waitpid(pid, nullptr, 0);
    throw SpawnError("exec " + *exe + ": " + std::strerror(exec_errno));
  }

  ProcessResult result;
  const auto deadline = start + kill_after;
  Clock::time_point killed_at{};
  Clock::time_point exited_at{};
  bool eof = false, reaped = false;
  int status = 0;
  char buf[4096];

  for (;;) {
    const auto now = Clock::now();
    if (!reaped) {
      pid_t r = ::waitpid(pid, &status, WNOHANG);
      if (r == pid) {
        reaped = true;
        exited_at = now;
      }
    }
    if (eof && reaped) break;
    // Descendants that keep the pipe open get a short drain after exit.
    if (reaped && !result.killed && now - exited_at > std::chrono::milliseconds(200)) break;
    if (!result.killed && !reaped && now >= deadline) {
      ::killpg(pid, SIGKILL);
      result.killed = true;
      killed_at = now;
    }
    if (result.killed && now - killed_at > grace) break;

    if (!eof) {
      pollfd p{out_r.get(), POLLIN, 0};
      Clock::duration wait = result.killed ? grace : deadline - now;
      int rc = ::poll(&p, 1, reaped ? 10 : poll_ms(wait));
      if (rc > 0) {
        ssize_t n = ::read(out_r.get(), buf, sizeof buf);
        if (n > 0)
          result.output.append(buf, static_cast<std::size_t>(n));
        else if (n == 0 || (n < 0 && errno != EINTR && errno != EAGAIN))
          eof = true;
      }
    } else {
      ::usleep(5000);
    }
  }
  if (result.killed) ::killpg(pid, SIGKILL);
  if (!reaped) {
    ::waitpid(pid, &status, 0);
  }
  result.wall = Clock::now() - start;
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  if (WIFSIGNALED(status)) result.signal = WTERMSIG(status);
  return result;
}

}  // namespace fzfeat
