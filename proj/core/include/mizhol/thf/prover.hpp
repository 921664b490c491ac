#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace mizhol::thf {

struct ProverConfig {
  std::filesystem::path executable;
  std::chrono::seconds timeout{30};
};

struct ProverResult {
  enum class Outcome { Theorem, NotFound, Timeout, InvocationError };
  Outcome outcome = Outcome::InvocationError;
  /// Value of the first "SZS status" line, if any.
  std::optional<std::string> szs_status;
  /// Standard output and standard error, interleaved.
  std::string output;
  /// Why the prover could not be run or did not finish normally.
  std::string error;

  /// 0 theorem, 1 not found or timeout, 2 invocation error.
  int exit_code() const;
};

/// "Theorem" from a line such as "% SZS status Theorem for foo".
std::optional<std::string> parse_szs_status(std::string_view output);

/// Runs `executable problem` and classifies the result. The prover is killed
/// when the timeout elapses.
ProverResult run_prover(const ProverConfig& cfg, const std::filesystem::path& problem);

}  // namespace mizhol::thf
