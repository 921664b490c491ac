#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mizhol {

struct SourceLoc {
  int line = 0;
  int col = 0;

  bool known() const { return line > 0; }
  friend bool operator==(const SourceLoc&, const SourceLoc&) = default;
};

enum class DiagCode {
  SyntaxError,
  UnknownName,
  ArityMismatch,
  KindMismatch,
  DuplicateName,
  ScopeError,
  InvalidArity,
  UndeclaredConstant,
  UnboundVariable,
  IllTyped,
  NotAFormula,
};

std::string_view to_string(DiagCode code);

struct Diagnostic {
  DiagCode code;
  SourceLoc loc;
  std::string message;

  /// "file:line:col: error: message", or without the position when unknown.
  std::string format(std::string_view file = {}) const;
};

using Diagnostics = std::vector<Diagnostic>;

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the front ends when the input cannot be turned into an AST.
class ParseError : public Error {
 public:
  explicit ParseError(Diagnostics diags);
  const Diagnostics& diagnostics() const { return diags_; }

 private:
  Diagnostics diags_;
};

}  // namespace mizhol
