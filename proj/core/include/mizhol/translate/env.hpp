#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mizhol/diagnostic.hpp"
#include "mizhol/hol/term.hpp"
#include "mizhol/mizar/signature.hpp"

namespace mizhol::translate {

struct TranslateOptions {
  /// Largest n for which replSep_n may be produced.
  std::size_t max_repl_sep_arity = 6;
};

/// Raised when an M-construct cannot be translated, e.g. an unknown name or
/// a Fraenkel term with too many binders.
class TranslateError : public Error {
 public:
  TranslateError(DiagCode code, SourceLoc loc, const std::string& message)
      : Error(message), code_(code), loc_(loc) {}
  DiagCode code() const { return code_; }
  SourceLoc loc() const { return loc_; }
  Diagnostic diagnostic() const { return {code_, loc_, what()}; }

 private:
  DiagCode code_;
  SourceLoc loc_;
};

/// Per-translation state: the signature, the M-variables in scope, and the
/// counter used for fresh names.
class TransEnv {
 public:
  explicit TransEnv(const mizar::Signature& sig, TranslateOptions opts = {});

  const mizar::Signature& signature() const { return *sig_; }
  const TranslateOptions& options() const { return opts_; }

  void push(hol::Term var);
  void pop(std::size_t n = 1);
  /// Innermost variable with this name, or nullptr.
  const hol::Term* lookup(std::string_view name) const;
  bool in_scope(std::string_view name) const { return lookup(name) != nullptr; }

  /// `base` when it clashes with nothing in scope, in the signature or among
  /// the builtin constants; otherwise `base` with the next counter value.
  std::string fresh(const std::string& base);
  hol::Term fresh_var(const std::string& base, hol::Type type);

 private:
  bool taken(const std::string& name) const;

  const mizar::Signature* sig_;
  TranslateOptions opts_;
  std::vector<hol::Term> scope_;
  std::size_t counter_ = 0;
};

}  // namespace mizhol::translate
