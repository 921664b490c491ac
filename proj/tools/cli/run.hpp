#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mizhol::cli {

struct RunConfig {
  /// check | translate | emit | match | prove
  std::string command;
  std::vector<std::filesystem::path> inputs;
  std::optional<std::filesystem::path> signature;
  /// Standard output when unset.
  std::optional<std::filesystem::path> output;
  std::vector<std::filesystem::path> axioms;
  /// match: quantifiers to strip from the scheme; defaults to its prefix length.
  std::optional<std::size_t> strip;
  std::size_t max_arity = 6;
  std::optional<std::filesystem::path> prover;
  unsigned timeout_seconds = 30;
};

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// Runs one subcommand. Results go to `out`, diagnostics to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace mizhol::cli
