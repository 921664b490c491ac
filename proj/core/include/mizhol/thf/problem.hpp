#pragma once

#include <string>
#include <vector>

#include "mizhol/diagnostic.hpp"
#include "mizhol/mizar/signature.hpp"
#include "mizhol/translate/declarations.hpp"

namespace mizhol::thf {

using translate::Declaration;
using translate::NamedFormula;

/// A conjecture with the axioms and declarations it needs.
struct Problem {
  std::string name;
  std::vector<Declaration> declarations;
  std::vector<NamedFormula> axioms;
  NamedFormula conjecture;

  const Declaration* find_declaration(const std::string& name) const;
};

/// A constant occurs that neither the signature nor the builtin family
/// declares, or it occurs at a type different from its declaration.
class AssembleError : public Error {
 public:
  AssembleError(DiagCode code, std::string constant, const std::string& message)
      : Error(message), code_(code), constant_(std::move(constant)) {}
  DiagCode code() const { return code_; }
  const std::string& constant() const { return constant_; }

 private:
  DiagCode code_;
  std::string constant_;
};

struct AssembleOptions {
  std::size_t max_repl_sep_arity = 6;
};

/// Collects exactly the declarations demanded by the constants occurring in
/// the conjecture and axioms: eps/epsax iff eps occurs; sethood and
/// replSep_k with replSepI_k, replSepE_k for each replSep_k; r2_hidden
/// always; signature constants as used. The Element-of mode brings its
/// nonemptiness axiom, plus its sethood axiom when sethood is present.
/// Inputs must be closed: free variables or metavariables raise
/// AssembleError(UnboundVariable).
Problem assemble_problem(NamedFormula conjecture, std::vector<NamedFormula> axioms,
                         const mizar::Signature& sig, const AssembleOptions& opts = {});

}  // namespace mizhol::thf
