#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mizhol/hol/term.hpp"
#include "mizhol/mizar/signature.hpp"

namespace mizhol::translate {

struct NamedFormula {
  std::string name;
  hol::Term formula;
};

/// A typed constant, optionally defined, with the axioms that travel with it.
struct Declaration {
  std::string name;
  hol::Type type;
  std::optional<hol::Term> definition;
  std::vector<NamedFormula> axioms;
};

namespace names {
inline constexpr const char* kEps = "eps";
inline constexpr const char* kEpsAx = "epsax";
inline constexpr const char* kMembership = "r2_hidden";
inline constexpr const char* kSethood = "sethood";
std::string repl_sep(std::size_t n);
std::string repl_sep_intro(std::size_t n);
std::string repl_sep_elim(std::size_t n);
/// n when `name` is replSep_n, otherwise nullopt.
std::optional<std::size_t> repl_sep_arity(const std::string& name);
}  // namespace names

hol::Term eps_constant();
hol::Term membership_constant();
hol::Term sethood_constant();
hol::Term repl_sep_constant(std::size_t n);
/// `a ∈ b`, i.e. r2_hidden a b.
hol::Term member(hol::Term a, hol::Term b);

/// (ι→o) → (ι→ι→o) → … → (ιⁿ→o) → (ιⁿ→ι) → (ιⁿ→o) → ι
hol::Type repl_sep_type(std::size_t n);

/// Declaration of replSep_n without axioms. Throws Error for n < 1.
Declaration gen_repl_sep_decl(std::size_t n);

/// replSepI_n and replSepE_n. Throws Error for n < 1.
std::pair<NamedFormula, NamedFormula> gen_repl_sep_axioms(std::size_t n);

Declaration eps_declaration();
Declaration membership_declaration();
Declaration sethood_declaration();

/// Axioms about the mode reached by `Element of`: nonemptiness of every
/// `Element of A`, and sethood of `λx. x ∈ Element of X` when requested.
std::vector<NamedFormula> element_of_axioms(const std::string& mode, bool with_sethood);

/// ε with epsax, r2_hidden, sethood with its definition; when `sig` has a
/// mode tagged elementof, that mode with its nonemptiness and sethood axioms.
std::vector<Declaration> base_declarations(const mizar::Signature* sig = nullptr);

}  // namespace mizhol::translate
