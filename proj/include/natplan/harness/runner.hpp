// Copyright 2026 The natplan Authors.
//
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

// Program execution behind a wire protocol.
//
// A runner executable takes no arguments, reads one request object on stdin
// and writes one response object on stdout:
//
//   request   {"source": str, "timeout_ms": int, "memory_mb": int,
//              "mode": "NativeCode" | "SolverCode"}
//   response  {"status": "ok" | "syntax_error" | "runtime_error" | "timeout",
//              "stdout": str, "stderr": str, "wall_ms": int}

#ifndef NATPLAN_HARNESS_RUNNER_HPP_
#define NATPLAN_HARNESS_RUNNER_HPP_

#include <fcntl.h>
#include <poll.h>
#include <pthread.h>
#include <signal.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cstring>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "natplan/error.hpp"
#include "natplan/serialize.hpp"

namespace natplan::harness {

enum class RunMode { kNativeCode, kSolverCode };
enum class RunStatus { kOk, kSyntaxError, kRuntimeError, kTimeout };

inline std::string_view to_string(RunMode m) {
  return m == RunMode::kNativeCode ? "NativeCode" : "SolverCode";
}

inline std::string_view to_string(RunStatus s) {
  switch (s) {
    case RunStatus::kOk: return "ok";
    case RunStatus::kSyntaxError: return "syntax_error";
    case RunStatus::kRuntimeError: return "runtime_error";
    case RunStatus::kTimeout: return "timeout";
  }
  return "?";
}

inline std::optional<RunStatus> run_status_from_name(std::string_view name) {
  for (auto s : {RunStatus::kOk, RunStatus::kSyntaxError, RunStatus::kRuntimeError,
                 RunStatus::kTimeout}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

inline constexpr int kDefaultTimeoutMs = 30'000;
inline constexpr int kDefaultMemoryMb = 1024;

struct RunnerRequest {
  std::string source;
  int timeout_ms = kDefaultTimeoutMs;
  int memory_mb = kDefaultMemoryMb;
  RunMode mode = RunMode::kNativeCode;
};

struct RunnerResponse {
  RunStatus status = RunStatus::kOk;
  std::string stdout_text;
  std::string stderr_text;
  long long wall_ms = 0;
};

inline Json to_json(const RunnerRequest& r) {
  return {{"source", r.source},
          {"timeout_ms", r.timeout_ms},
          {"memory_mb", r.memory_mb},
          {"mode", std::string(to_string(r.mode))}};
}

inline Json to_json(const RunnerResponse& r) {
  return {{"status", std::string(to_string(r.status))},
          {"stdout", r.stdout_text},
          {"stderr", r.stderr_text},
          {"wall_ms", r.wall_ms}};
}

inline RunnerRequest runner_request_from_json(const Json& j) {
  auto bad = [](const std::string& why) {
    return Error(ErrorCode::kInvalidArgument, "runner_request", why);
  };
  if (!j.is_object()) throw bad("request must be an object");
  RunnerRequest r;
  if (!j.contains("source") || !j["source"].is_string()) throw bad("source must be a string");
  r.source = j["source"].get<std::string>();
  if (!j.contains("timeout_ms") || !j["timeout_ms"].is_number_integer()) {
    throw bad("timeout_ms must be an integer");
  }
  r.timeout_ms = j["timeout_ms"].get<int>();
  if (!j.contains("memory_mb") || !j["memory_mb"].is_number_integer()) {
    throw bad("memory_mb must be an integer");
  }
  r.memory_mb = j["memory_mb"].get<int>();
  const std::string mode = j.value("mode", "");
  if (mode == "NativeCode") r.mode = RunMode::kNativeCode;
  else if (mode == "SolverCode") r.mode = RunMode::kSolverCode;
  else throw bad("unknown mode '" + mode + "'");
  return r;
}

inline RunnerResponse runner_response_from_json(const Json& j) {
  auto bad = [](const std::string& why) {
    return Error(ErrorCode::kRunnerFailure, "runner_response", why);
  };
  if (!j.is_object()) throw bad("response must be an object");
  if (!j.contains("status") || !j["status"].is_string()) throw bad("status must be a string");
  auto status = run_status_from_name(j["status"].get<std::string>());
  if (!status) throw bad("unknown status '" + j["status"].get<std::string>() + "'");
  RunnerResponse r;
  r.status = *status;
  for (const char* key : {"stdout", "stderr"}) {
    if (j.contains(key) && !j[key].is_string()) throw bad(std::string(key) + " must be a string");
  }
  r.stdout_text = j.value("stdout", "");
  r.stderr_text = j.value("stderr", "");
  if (j.contains("wall_ms") && !j["wall_ms"].is_number()) throw bad("wall_ms must be a number");
  r.wall_ms = j.value("wall_ms", 0LL);
  return r;
}

// Implementations must tolerate concurrent run() calls.
class Runner {
 public:
  virtual ~Runner() = default;
  virtual RunnerResponse run(const RunnerRequest& request) = 0;
};

// Spawns `executable` once per request. If the runner itself outlives
// 2 * timeout_ms + grace it is killed and the request reported as a timeout.
class SubprocessRunner final : public Runner {
 public:
  explicit SubprocessRunner(std::filesystem::path executable, int grace_ms = 5'000)
      : executable_(std::move(executable)), grace_ms_(grace_ms) {}

  RunnerResponse run(const RunnerRequest& request) override {
    const std::string input = to_json(request).dump();
    const auto started = std::chrono::steady_clock::now();
    const auto deadline =
        started + std::chrono::milliseconds(2LL * request.timeout_ms + grace_ms_);

    int to_child[2];
    int from_child[2];
    if (pipe2(to_child, O_CLOEXEC) != 0) fail("pipe");
    if (pipe2(from_child, O_CLOEXEC) != 0) {
      close(to_child[0]);
      close(to_child[1]);
      fail("pipe");
    }

    const pid_t pid = fork();
    if (pid < 0) {
      for (int fd : {to_child[0], to_child[1], from_child[0], from_child[1]}) close(fd);
      fail("fork");
    }
    if (pid == 0) {
      dup2(to_child[0], STDIN_FILENO);
      dup2(from_child[1], STDOUT_FILENO);
      setpgid(0, 0);
      const std::string exe = executable_.string();
      execl(exe.c_str(), exe.c_str(), static_cast<char*>(nullptr));
      _exit(127);
    }
    close(to_child[0]);
    close(from_child[1]);
    int in_fd = to_child[1];
    const int out_fd = from_child[0];
    fcntl(in_fd, F_SETFL, O_NONBLOCK);

    std::string output;
    std::size_t written = 0;
    bool killed = false;
    char buffer[65536];
    while (true) {
      const auto now = std::chrono::steady_clock::now();
      if (now >= deadline) {
        kill(-pid, SIGKILL);
        kill(pid, SIGKILL);
        killed = true;
        break;
      }
      pollfd fds[2];
      nfds_t n = 0;
      fds[n++] = {out_fd, POLLIN, 0};
      if (in_fd >= 0) fds[n++] = {in_fd, POLLOUT, 0};
      const auto wait_ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now).count();
      const int ready = poll(fds, n, static_cast<int>(std::min<long long>(wait_ms, 100)));
      if (ready < 0 && errno != EINTR) break;
      if (in_fd >= 0 && n > 1 && (fds[1].revents & (POLLOUT | POLLERR | POLLHUP))) {
        const ssize_t w = write_no_sigpipe(in_fd, input.data() + written, input.size() - written);
        if (w > 0) written += static_cast<std::size_t>(w);
        if (w < 0 && errno != EAGAIN && errno != EINTR) written = input.size();
        if (written == input.size()) {
          close(in_fd);
          in_fd = -1;
        }
      }
      if (fds[0].revents & (POLLIN | POLLHUP | POLLERR)) {
        const ssize_t r = read(out_fd, buffer, sizeof buffer);
        if (r > 0) {
          output.append(buffer, static_cast<std::size_t>(r));
        } else if (r == 0) {
          break;
        }
      }
    }
    if (in_fd >= 0) close(in_fd);
    close(out_fd);
    int status = 0;
    waitpid(pid, &status, 0);
    const long long elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - started)
                                  .count();

    if (killed) {
      return {RunStatus::kTimeout, "", "runner exceeded its supervision deadline", elapsed};
    }
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
      throw Error(ErrorCode::kRunnerFailure, executable_.string(),
                  "runner " + executable_.string() + " exited abnormally (status " +
                      std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1) + ")");
    }
    Json j = Json::parse(output, nullptr, false);
    if (j.is_discarded()) {
      throw Error(ErrorCode::kRunnerFailure, executable_.string(),
                  "runner " + executable_.string() + " wrote a non-JSON response");
    }
    return runner_response_from_json(j);
  }

 private:
  // A runner that exits without reading its input must not take us down with
  // SIGPIPE; the signal is blocked for this thread and any pending one drained.
  static ssize_t write_no_sigpipe(int fd, const char* data, std::size_t size) {
    sigset_t pipe_set, old_set;
    sigemptyset(&pipe_set);
    sigaddset(&pipe_set, SIGPIPE);
    pthread_sigmask(SIG_BLOCK, &pipe_set, &old_set);
    const ssize_t w = write(fd, data, size);
    const int saved = errno;
    if (w < 0 && errno == EPIPE) {
      const timespec zero{0, 0};
      sigtimedwait(&pipe_set, nullptr, &zero);
    }
    pthread_sigmask(SIG_SETMASK, &old_set, nullptr);
    errno = saved;
    return w;
  }

  [[noreturn]] void fail(const char* what) const {
    throw Error(ErrorCode::kRunnerFailure, executable_.string(),
                std::string(what) + " failed: " + std::strerror(errno));
  }

  std::filesystem::path executable_;
  int grace_ms_;
};

}  // namespace natplan::harness

#endif  // NATPLAN_HARNESS_RUNNER_HPP_
