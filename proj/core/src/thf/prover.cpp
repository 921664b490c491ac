#include "mizhol/thf/prover.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <sstream>

namespace mizhol::thf {

int ProverResult::exit_code() const {
  switch (outcome) {
    case Outcome::Theorem: return 0;
    case Outcome::NotFound:
    case Outcome::Timeout: return 1;
    case Outcome::InvocationError: return 2;
  }
  return 2;
}

std::optional<std::string> parse_szs_status(std::string_view output) {
  std::istringstream in{std::string(output)};
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find("SZS status");
    if (pos == std::string::npos) continue;
    std::istringstream words(line.substr(pos + 10));
    std::string status;
    if (words >> status) return status;
  }
  return std::nullopt;
}

namespace {

bool proved(const std::string& status) {
  return status == "Theorem" || status == "Unsatisfiable" || status == "ContradictoryAxioms";
}

}  // namespace

ProverResult run_prover(const ProverConfig& cfg, const std::filesystem::path& problem) {
  ProverResult r;
  int out_pipe[2];
  if (pipe(out_pipe) != 0) {
    r.error = std::string("pipe: ") + std::strerror(errno);
    return r;
  }
  // Reports exec failure from the child: closes on successful exec.
  int err_pipe[2];
  if (pipe2(err_pipe, O_CLOEXEC) != 0) {
    r.error = std::string("pipe: ") + std::strerror(errno);
    close(out_pipe[0]);
    close(out_pipe[1]);
    return r;
  }
  const std::string exe = cfg.executable.string();
  const std::string arg = problem.string();
  pid_t pid = fork();
  if (pid < 0) {
    r.error = std::string("fork: ") + std::strerror(errno);
    return r;
  }
  if (pid == 0) {
    setpgid(0, 0);
    dup2(out_pipe[1], STDOUT_FILENO);
    dup2(out_pipe[1], STDERR_FILENO);
    close(out_pipe[0]);
    close(out_pipe[1]);
    close(err_pipe[0]);
    char* argv[] = {const_cast<char*>(exe.c_str()), const_cast<char*>(arg.c_str()), nullptr};
    execv(exe.c_str(), argv);
    int e = errno;
    [[maybe_unused]] auto n = write(err_pipe[1], &e, sizeof e);
    _exit(127);
  }
  close(out_pipe[1]);
  close(err_pipe[1]);
  int exec_errno = 0;
  if (read(err_pipe[0], &exec_errno, sizeof exec_errno) == sizeof exec_errno) {
    close(err_pipe[0]);
    close(out_pipe[0]);
    waitpid(pid, nullptr, 0);
    r.error = "cannot execute " + exe + ": " + std::strerror(exec_errno);
    return r;
  }
  close(err_pipe[0]);

  const auto deadline = std::chrono::steady_clock::now() + cfg.timeout;
  bool timed_out = false;
  char buf[4096];
  for (;;) {
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) {
      timed_out = true;
      break;
    }
    pollfd pfd{out_pipe[0], POLLIN, 0};
    int rc = poll(&pfd, 1, static_cast<int>(std::min<long long>(left.count(), 1000)));
    if (rc < 0 && errno == EINTR) continue;
    if (rc < 0) break;
    if (rc == 0) continue;
    ssize_t n = read(out_pipe[0], buf, sizeof buf);
    if (n <= 0) break;
    r.output.append(buf, static_cast<std::size_t>(n));
  }
  close(out_pipe[0]);
  if (timed_out) kill(-pid, SIGKILL);
  int status = 0;
  waitpid(pid, &status, 0);

  r.szs_status = parse_szs_status(r.output);
  if (timed_out) {
    r.outcome = ProverResult::Outcome::Timeout;
  } else if (r.szs_status && proved(*r.szs_status)) {
    r.outcome = ProverResult::Outcome::Theorem;
  } else if (WIFEXITED(status) || r.szs_status) {
    r.outcome = ProverResult::Outcome::NotFound;
  } else {
    r.error = "prover terminated by a signal";
  }
  return r;
}

}  // namespace mizhol::thf
